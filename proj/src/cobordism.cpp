#include "qtcob/cobordism.hpp"

#include <algorithm>

namespace qtcob {

namespace {

void require_valid_isotropy(const IsotropyModel& m, const char* who) {
    ValidationReport report = validate_isotropy(m);
    if (!report.ok) throw ModelError(std::string(who) + ": invalid isotropy model", report);
}

std::vector<int> all_plus(const Polytope& p) {
    return std::vector<int>(static_cast<std::size_t>(p.facet_count()), 1);
}

}  // namespace

FakeWeightedProjective::FakeWeightedProjective(CharacteristicModel model)
    : model_(std::move(model)) {
    ValidationReport report;
    if (!is_simplex(model_.polytope()))
        report.add({"fwp/not-simplex", "polytope is not a simplex", {}});
    ValidationReport labels = validate_characteristic(model_);
    for (Issue& issue : labels.issues) report.add(std::move(issue));
    if (!report.ok)
        throw ModelError("FakeWeightedProjective: invalid component", report);
}

std::vector<Int> FakeWeightedProjective::local_group_orders() const {
    std::vector<Int> orders = vertex_orders(model_);
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<CharacteristicModel> boundary_components(const IsotropyModel& m) {
    require_valid_isotropy(m, "boundary_components");
    std::vector<CharacteristicModel> components;
    components.reserve(m.marking().facets().size());
    for (int e : m.marking().facets())
        components.push_back(restrict_to_exceptional(m, e));
    return components;
}

CobordismRelation boundary_relation(const IsotropyModel& m) {
    require_valid_isotropy(m, "boundary_relation");
    const OrientationDatum host_datum = canonical_orientation(m.polytope());
    CobordismRelation relation;
    relation.provenance = "boundary";
    relation.notes.push_back("component orientations induced from the host polytope");
    for (int e : m.marking().facets()) {
        Restriction r = restrict_component(m, e);
        OrientationDatum datum = induced_orientation(m.polytope(), host_datum, e, r);
        std::vector<int> signs = all_plus(r.model.polytope());
        relation.components.push_back(
            {OmniorientedModel(std::move(r.model), std::move(datum), std::move(signs)), +1});
    }
    return relation;
}

DecompositionPipeline build_decomposition_pipeline(const CharacteristicModel& x,
                                                   std::optional<IntVec> lambda0) {
    ValidationReport base = validate_characteristic(x);
    if (!base.ok) throw ModelError("simplex_decomposition: invalid characteristic model", base);

    const Polytope& p = x.polytope();
    const int n = p.dim();

    // Edge spans Z(e) of the base polytope; the extra label must avoid the
    // rational span of every one of them.
    std::vector<Sublattice> spans;
    std::vector<Face> base_edges = edges(p);
    spans.reserve(base_edges.size());
    for (const Face& e : base_edges) {
        std::vector<IntVec> gens;
        gens.reserve(e.facet_set.size());
        for (int f : e.facet_set) gens.push_back(x.label(f));
        spans.emplace_back(std::move(gens), n);
    }

    IntVec extra;
    if (lambda0.has_value()) {
        if (lambda0->size() != n)
            throw std::invalid_argument("simplex_decomposition: lambda0 length must equal dim");
        ValidationReport report;
        if (!is_primitive(*lambda0))
            report.add({"lambda0/not-primitive", "lambda0 must be a primitive vector", {}});
        for (std::size_t i = 0; i < spans.size(); ++i) {
            if (in_rational_span(*lambda0, spans[i]))
                report.add({"lambda0/in-edge-span",
                            "lambda0 lies in the label span of an edge",
                            p.facet_names_of(base_edges[i].facet_set)});
        }
        if (!report.ok) throw ModelError("simplex_decomposition: lambda0 rejected", report);
        extra = *lambda0;
    } else {
        extra = find_avoiding_vector(spans, n);
    }

    // Prism over the base, then cut every bottom vertex.
    Polytope q = prism(p);
    const int bottom = q.facet_index(q.facet_names()[static_cast<std::size_t>(p.facet_count())]);
    const int top = bottom + 1;
    std::vector<std::string> truncation_names;
    truncation_names.reserve(static_cast<std::size_t>(p.vertex_count()));
    for (int v = 0; v < p.vertex_count(); ++v) {
        FacetSet target = p.vertex(v);
        target.push_back(bottom);
        Truncation t = truncate_vertex(q, target);
        q = std::move(t.polytope);
        truncation_names.push_back(std::move(t.new_facet));
    }

    std::vector<int> marking_facets;
    marking_facets.push_back(top);
    std::vector<int> truncation_facets;
    for (const std::string& name : truncation_names) {
        truncation_facets.push_back(q.facet_index(name));
        marking_facets.push_back(q.facet_index(name));
    }
    ExceptionalMarking marking(q, std::move(marking_facets));

    std::vector<std::optional<IntVec>> labels(static_cast<std::size_t>(q.facet_count()));
    for (int f = 0; f < p.facet_count(); ++f) labels[static_cast<std::size_t>(f)] = x.label(f);
    labels[static_cast<std::size_t>(bottom)] = extra;

    IsotropyModel pipeline(std::move(q), std::move(marking), std::move(labels));
    ValidationReport check = validate_isotropy(pipeline);
    if (!check.ok)
        throw std::runtime_error(
            "simplex_decomposition: internal invariant violation (pipeline not a valid "
            "isotropy model)");

    return DecompositionPipeline{std::move(pipeline), top, std::move(truncation_facets),
                                 std::move(extra)};
}

CobordismRelation simplex_decomposition(const CharacteristicModel& x,
                                        std::optional<IntVec> lambda0) {
    DecompositionPipeline pipe = build_decomposition_pipeline(x, std::move(lambda0));
    const IsotropyModel& m = pipe.model;
    const OrientationDatum host_datum = canonical_orientation(m.polytope());

    CobordismRelation relation;
    relation.provenance = "simplex-decomposition";
    relation.lambda0 = pipe.lambda0;
    relation.notes.push_back(
        "simplex components carry the reversed induced boundary orientation so the "
        "relation reads [target] = sum of components");

    Restriction top = restrict_component(m, pipe.top_facet);
    // The untouched top copy restricts to the input model label-for-label.
    for (int f = 0; f < top.model.polytope().facet_count(); ++f) {
        const int source = top.source_facet[static_cast<std::size_t>(f)];
        if (!vec_equal(top.model.label(f), x.label(x.polytope().facet_index(
                           m.polytope().facet_name(source)))))
            throw std::runtime_error(
                "simplex_decomposition: internal invariant violation (top restriction)");
    }
    OrientationDatum top_datum = induced_orientation(m.polytope(), host_datum, pipe.top_facet, top);
    relation.components.push_back(
        {OmniorientedModel(std::move(top.model), std::move(top_datum),
                           all_plus(x.polytope())),
         -1});

    for (int cut : pipe.truncation_facets) {
        Restriction r = restrict_component(m, cut);
        OrientationDatum datum =
            induced_orientation(m.polytope(), host_datum, cut, r).reversed();
        FakeWeightedProjective piece(r.model);  // enforces the simplex invariants
        relation.components.push_back(
            {OmniorientedModel(piece.model(), std::move(datum), all_plus(piece.model().polytope())),
             +1});
    }
    return relation;
}

CobordismRelation vertex_cut_relation(const Polytope& q,
                                      const std::map<std::string, IntVec>& labels) {
    Polytope cut = q;
    std::vector<std::string> truncation_names;
    truncation_names.reserve(static_cast<std::size_t>(q.vertex_count()));
    for (int v = 0; v < q.vertex_count(); ++v) {
        Truncation t = truncate_vertex(cut, q.vertex(v));
        cut = std::move(t.polytope);
        truncation_names.push_back(std::move(t.new_facet));
    }

    std::vector<int> marked;
    marked.reserve(truncation_names.size());
    for (const std::string& name : truncation_names) marked.push_back(cut.facet_index(name));
    ExceptionalMarking marking(cut, std::move(marked));

    std::vector<std::optional<IntVec>> by_facet(static_cast<std::size_t>(cut.facet_count()));
    for (const auto& [name, label] : labels) {
        const int f = cut.facet_index(name);  // throws on unknown ids
        by_facet[static_cast<std::size_t>(f)] = label;
    }
    IsotropyModel m(std::move(cut), std::move(marking), std::move(by_facet));
    require_valid_isotropy(m, "vertex_cut_relation");

    CobordismRelation relation = boundary_relation(m);
    relation.provenance = "vertex-cut";
    for (const RelationComponent& c : relation.components) {
        if (!is_simplex(c.model.polytope()))
            throw std::runtime_error(
                "vertex_cut_relation: internal invariant violation (non-simplex component)");
    }
    return relation;
}

HirzebruchReport check_hirzebruch_schema(const CharacteristicModel& target,
                                         const IsotropyModel& q) {
    HirzebruchReport out;

    ValidationReport base = validate_isotropy(q);
    for (Issue& issue : base.issues) {
        out.ok = false;
        out.issues.push_back(std::move(issue));
    }
    if (!out.ok) return out;

    // Locate the designated copy of the target polytope among the marked
    // facets; all other marked facets must restrict to simplices.
    int designated = -1;
    std::vector<int> simplex_facets;
    for (int e : q.marking().facets()) {
        Restriction r = restrict_component(q, e);
        if (designated < 0 && r.model.polytope().same_as(target.polytope())) {
            designated = e;
        } else if (is_simplex(r.model.polytope())) {
            simplex_facets.push_back(e);
        } else {
            out.ok = false;
            out.issues.push_back({"hirzebruch/shape",
                                  "marked facet is neither the designated base nor a simplex",
                                  {q.polytope().facet_name(e)}});
        }
    }
    if (designated < 0) {
        out.ok = false;
        out.issues.push_back({"hirzebruch/shape",
                              "no marked facet matches the target polytope",
                              {}});
    }
    if (!out.ok) return out;

    // Condition (1): labels agree with the target on every facet meeting the
    // designated copy.
    Restriction base_copy = restrict_component(q, designated);
    for (std::size_t i = 0; i < base_copy.source_facet.size(); ++i) {
        const int host_facet = base_copy.source_facet[i];
        const IntVec& expected = target.label(static_cast<int>(i));
        if (!vec_equal(q.label(host_facet), expected)) {
            out.ok = false;
            out.issues.push_back({"hirzebruch/condition1",
                                  "label disagrees with the target on a facet meeting its copy",
                                  {q.polytope().facet_name(host_facet)}});
        }
    }

    // Condition (2): every edge disjoint from the exceptional facets carries
    // a Z^n basis.
    for (const Face& e : edges(q.polytope())) {
        bool touches_exceptional = false;
        for (int f : e.facet_set)
            if (q.is_exceptional(f)) { touches_exceptional = true; break; }
        if (touches_exceptional) continue;
        std::vector<IntVec> labels;
        labels.reserve(e.facet_set.size());
        for (int f : e.facet_set) labels.push_back(q.label(f));
        if (abs(det(columns(labels))) != 1) {
            out.ok = false;
            out.issues.push_back({"hirzebruch/condition2",
                                  "edge labels do not form a Z^n basis",
                                  q.polytope().facet_names_of(e.facet_set)});
        }
    }
    if (!out.ok) return out;

    // Emit the relation [target] = sum of simplex components, orientations as
    // in simplex_decomposition.
    const OrientationDatum host_datum = canonical_orientation(q.polytope());
    CobordismRelation relation;
    relation.provenance = "hirzebruch-schema";
    relation.notes.push_back(
        "simplex components carry the reversed induced boundary orientation");
    OrientationDatum base_datum =
        induced_orientation(q.polytope(), host_datum, designated, base_copy);
    relation.components.push_back(
        {OmniorientedModel(std::move(base_copy.model), std::move(base_datum),
                           all_plus(target.polytope())),
         -1});
    for (int e : simplex_facets) {
        Restriction r = restrict_component(q, e);
        OrientationDatum datum =
            induced_orientation(q.polytope(), host_datum, e, r).reversed();
        relation.components.push_back(
            {OmniorientedModel(r.model, std::move(datum), all_plus(r.model.polytope())), +1});
    }
    out.relation = std::move(relation);
    return out;
}

}  // namespace qtcob

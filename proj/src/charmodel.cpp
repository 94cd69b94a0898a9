#include "qtcob/charmodel.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace qtcob {

namespace {

// 1-based position of facet f in the sorted facet set.
int position_in(const FacetSet& sorted_set, int f) {
    const auto it = std::lower_bound(sorted_set.begin(), sorted_set.end(), f);
    return static_cast<int>(it - sorted_set.begin()) + 1;
}

}  // namespace

OrientationDatum::OrientationDatum(std::vector<int> vertex_signs)
    : signs_(std::move(vertex_signs)) {
    for (int s : signs_) {
        if (s != 1 && s != -1)
            throw std::invalid_argument("OrientationDatum: signs must be +-1");
    }
}

OrientationDatum OrientationDatum::reversed() const {
    std::vector<int> flipped = signs_;
    for (int& s : flipped) s = -s;
    return OrientationDatum(std::move(flipped));
}

// Orientation transport across the ridge shared by vertices u = S + {f} and
// v = S + {g}: coherent orientations induce opposite orientations on S, which
// in the sorted-ordering-sign representation reads
//   sign(v) = -sign(u) * (-1)^(pos(f in u) + pos(g in v)).
namespace {
int transported_sign(int sign_u, const FacetSet& u, int f, const FacetSet& v, int g) {
    const int exponent = position_in(u, f) + position_in(v, g);
    const int factor = (exponent % 2 == 0) ? -1 : 1;
    return sign_u * factor;
}

struct RidgePair {
    int other_vertex;
    int own_facet;    // facet of this vertex not on the ridge
    int other_facet;  // facet of the other vertex not on the ridge
};

std::vector<std::vector<RidgePair>> adjacency(const Polytope& p) {
    std::map<FacetSet, std::vector<std::pair<int, int>>> ridges;  // ridge -> (vertex, facet)
    for (int v = 0; v < p.vertex_count(); ++v) {
        const FacetSet& vs = p.vertex(v);
        for (std::size_t skip = 0; skip < vs.size(); ++skip) {
            FacetSet ridge;
            ridge.reserve(vs.size() - 1);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != skip) ridge.push_back(vs[i]);
            ridges[ridge].push_back({v, vs[skip]});
        }
    }
    std::vector<std::vector<RidgePair>> adj(static_cast<std::size_t>(p.vertex_count()));
    for (const auto& [ridge, pair] : ridges) {
        const auto& [v0, f0] = pair[0];
        const auto& [v1, f1] = pair[1];
        adj[static_cast<std::size_t>(v0)].push_back({v1, f0, f1});
        adj[static_cast<std::size_t>(v1)].push_back({v0, f1, f0});
    }
    return adj;
}
}  // namespace

OrientationDatum canonical_orientation(const Polytope& p) {
    std::vector<int> signs(static_cast<std::size_t>(p.vertex_count()), 0);
    const auto adj = adjacency(p);
    std::queue<int> frontier;
    signs[0] = 1;  // vertex 0 is the lexicographically least one
    frontier.push(0);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (const RidgePair& e : adj[static_cast<std::size_t>(u)]) {
            const int s = transported_sign(signs[static_cast<std::size_t>(u)], p.vertex(u),
                                           e.own_facet, p.vertex(e.other_vertex), e.other_facet);
            int& dst = signs[static_cast<std::size_t>(e.other_vertex)];
            if (dst == 0) {
                dst = s;
                frontier.push(e.other_vertex);
            } else if (dst != s) {
                throw std::runtime_error(
                    "canonical_orientation: dual sphere is not orientable (invalid incidence)");
            }
        }
    }
    return OrientationDatum(std::move(signs));
}

bool orientation_consistent(const Polytope& p, const OrientationDatum& d) {
    if (d.vertex_count() != p.vertex_count()) return false;
    const auto adj = adjacency(p);
    for (int u = 0; u < p.vertex_count(); ++u) {
        for (const RidgePair& e : adj[static_cast<std::size_t>(u)]) {
            const int s = transported_sign(d.sign(u), p.vertex(u), e.own_facet,
                                           p.vertex(e.other_vertex), e.other_facet);
            if (d.sign(e.other_vertex) != s) return false;
        }
    }
    return true;
}

CharacteristicModel::CharacteristicModel(Polytope polytope, std::vector<IntVec> labels_by_facet)
    : polytope_(std::move(polytope)), labels_(std::move(labels_by_facet)) {
    if (static_cast<int>(labels_.size()) != polytope_.facet_count())
        throw std::invalid_argument("CharacteristicModel: one label per facet required");
    for (const IntVec& l : labels_) {
        if (l.size() != polytope_.dim())
            throw std::invalid_argument("CharacteristicModel: label length must equal dim");
    }
}

IntMat CharacteristicModel::vertex_label_matrix(int v) const {
    const FacetSet& vs = polytope_.vertex(v);
    IntMat m(polytope_.dim(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j)
        m.col(static_cast<Eigen::Index>(j)) = labels_[static_cast<std::size_t>(vs[j])];
    return m;
}

ValidationReport validate_characteristic(const CharacteristicModel& m) {
    ValidationReport report;
    for (int v = 0; v < m.polytope().vertex_count(); ++v) {
        if (det(m.vertex_label_matrix(v)) == 0)
            report.add({"labels/dependent", "facet labels at a vertex are linearly dependent",
                        m.polytope().facet_names_of(m.polytope().vertex(v))});
    }
    return report;
}

Int vertex_determinant(const CharacteristicModel& m, int v) {
    return det(m.vertex_label_matrix(v));
}

std::vector<Int> vertex_orders(const CharacteristicModel& m) {
    std::vector<Int> orders;
    orders.reserve(static_cast<std::size_t>(m.polytope().vertex_count()));
    for (int v = 0; v < m.polytope().vertex_count(); ++v)
        orders.push_back(abs(vertex_determinant(m, v)));
    return orders;
}

bool is_smooth(const CharacteristicModel& m) {
    for (int v = 0; v < m.polytope().vertex_count(); ++v) {
        if (abs(vertex_determinant(m, v)) != 1) return false;
    }
    return true;
}

IsotropyModel::IsotropyModel(Polytope polytope, ExceptionalMarking marking,
                             std::vector<std::optional<IntVec>> labels_by_facet)
    : polytope_(std::move(polytope)), marking_(std::move(marking)),
      labels_(std::move(labels_by_facet)) {
    if (polytope_.dim() < 2)
        throw std::invalid_argument("IsotropyModel: host dimension must be >= 2");
    if (static_cast<int>(labels_.size()) != polytope_.facet_count())
        throw std::invalid_argument("IsotropyModel: one label slot per facet required");
    for (int f = 0; f < polytope_.facet_count(); ++f) {
        const auto& slot = labels_[static_cast<std::size_t>(f)];
        if (marking_.contains(f)) {
            if (slot.has_value())
                throw std::invalid_argument("IsotropyModel: exceptional facet '" +
                                            polytope_.facet_name(f) + "' must not carry a label");
        } else {
            if (!slot.has_value())
                throw std::invalid_argument("IsotropyModel: missing label on facet '" +
                                            polytope_.facet_name(f) + "'");
            if (slot->size() != polytope_.dim() - 1)
                throw std::invalid_argument("IsotropyModel: label length must equal dim-1");
        }
    }
}

const IntVec& IsotropyModel::label(int facet) const {
    const auto& slot = labels_.at(static_cast<std::size_t>(facet));
    if (!slot.has_value())
        throw std::invalid_argument("IsotropyModel: facet '" + polytope_.facet_name(facet) +
                                    "' is exceptional and carries no label");
    return *slot;
}

ValidationReport validate_isotropy(const IsotropyModel& m) {
    ValidationReport report = validate_marking(m.polytope(), m.marking());
    for (int v = 0; v < m.polytope().vertex_count(); ++v) {
        const FacetSet& vs = m.polytope().vertex(v);
        std::vector<IntVec> labels;
        FacetSet non_exceptional;
        for (int f : vs) {
            if (!m.is_exceptional(f)) {
                labels.push_back(m.label(f));
                non_exceptional.push_back(f);
            }
        }
        if (!labels.empty() && !is_independent(labels))
            report.add({"labels/dependent",
                        "isotropy labels on a nonempty intersection are linearly dependent",
                        m.polytope().facet_names_of(non_exceptional)});
    }
    return report;
}

CharacteristicModel extend_to_characteristic(const IsotropyModel& m) {
    const int n = m.polytope().dim();
    std::vector<IntVec> labels;
    labels.reserve(static_cast<std::size_t>(m.polytope().facet_count()));
    for (int f = 0; f < m.polytope().facet_count(); ++f) {
        IntVec l = IntVec::Zero(n);
        if (m.is_exceptional(f)) {
            l(n - 1) = 1;
        } else {
            const IntVec& base = m.label(f);
            for (Eigen::Index i = 0; i < base.size(); ++i) l(i) = base(i);
        }
        labels.push_back(std::move(l));
    }
    return CharacteristicModel(m.polytope(), std::move(labels));
}

Restriction restrict_component(const IsotropyModel& m, int exceptional_facet) {
    if (!m.is_exceptional(exceptional_facet))
        throw std::invalid_argument("restrict_component: facet '" +
                                    m.polytope().facet_name(exceptional_facet) +
                                    "' is not exceptional");
    const Polytope& q = m.polytope();

    std::vector<int> host_vertices;
    std::set<int> host_facets;
    for (int v = 0; v < q.vertex_count(); ++v) {
        const FacetSet& vs = q.vertex(v);
        if (!std::binary_search(vs.begin(), vs.end(), exceptional_facet)) continue;
        host_vertices.push_back(v);
        for (int f : vs)
            if (f != exceptional_facet) host_facets.insert(f);
    }

    std::vector<int> source_facet(host_facets.begin(), host_facets.end());  // ascending
    std::map<int, int> to_local;
    std::vector<std::string> names;
    names.reserve(source_facet.size());
    for (std::size_t i = 0; i < source_facet.size(); ++i) {
        to_local[source_facet[i]] = static_cast<int>(i);
        names.push_back(q.facet_name(source_facet[i]));
    }

    std::vector<FacetSet> local_vertices;
    local_vertices.reserve(host_vertices.size());
    for (int v : host_vertices) {
        FacetSet w;
        for (int f : q.vertex(v))
            if (f != exceptional_facet) w.push_back(to_local.at(f));
        local_vertices.push_back(std::move(w));
    }

    Polytope facet_polytope(q.dim() - 1, std::move(names), std::move(local_vertices));

    // The polytope constructor canonicalises vertex order; rebuild the
    // correspondence through facet-set lookup.
    std::vector<int> source_vertex(static_cast<std::size_t>(facet_polytope.vertex_count()), -1);
    for (int v : host_vertices) {
        FacetSet w;
        for (int f : q.vertex(v))
            if (f != exceptional_facet) w.push_back(to_local.at(f));
        const int local = facet_polytope.vertex_index(w);
        source_vertex[static_cast<std::size_t>(local)] = v;
    }

    std::vector<IntVec> labels;
    labels.reserve(source_facet.size());
    for (int f : source_facet) labels.push_back(m.label(f));

    return Restriction{CharacteristicModel(std::move(facet_polytope), std::move(labels)),
                       std::move(source_vertex), std::move(source_facet)};
}

CharacteristicModel restrict_to_exceptional(const IsotropyModel& m, int exceptional_facet) {
    return restrict_component(m, exceptional_facet).model;
}

OrientationDatum induced_orientation(const Polytope& host, const OrientationDatum& host_datum,
                                     int exceptional_facet, const Restriction& r) {
    // Oriented-link rule: at a host vertex v containing the exceptional facet,
    // move that facet to the front of the positive ordering; the remaining
    // ordering (which is the restricted vertex's sorted ordering, since
    // restriction preserves relative facet order) is positive for the link.
    std::vector<int> signs;
    signs.reserve(r.source_vertex.size());
    for (int host_v : r.source_vertex) {
        const FacetSet& vs = host.vertex(host_v);
        const int p = position_in(vs, exceptional_facet);
        const int factor = (p % 2 == 1) ? 1 : -1;  // (-1)^(p-1)
        signs.push_back(host_datum.sign(host_v) * factor);
    }
    return OrientationDatum(std::move(signs));
}

std::optional<IntMat> delta_translation(const CharacteristicModel& m1,
                                        const CharacteristicModel& m2, const Int& bound) {
    if (bound < 1) throw std::invalid_argument("delta_translation: bound must be >= 1");
    if (!m1.polytope().same_as(m2.polytope()))
        throw std::invalid_argument("delta_translation: polytope mismatch");

    // The facet identification is fixed, so the candidate is unique over Q:
    // solve u * L1(v) = L2(v) at any vertex with invertible labels.
    int anchor = -1;
    for (int v = 0; v < m1.polytope().vertex_count(); ++v) {
        if (det(m1.vertex_label_matrix(v)) != 0) { anchor = v; break; }
    }
    if (anchor < 0)
        throw std::invalid_argument("delta_translation: degenerate model (no independent vertex)");

    const auto u = solve_left_integer(m1.vertex_label_matrix(anchor),
                                      m2.vertex_label_matrix(anchor));
    if (!u.has_value()) return std::nullopt;
    const Int d = det(*u);
    if (d != 1 && d != -1) return std::nullopt;
    for (Eigen::Index i = 0; i < u->rows(); ++i)
        for (Eigen::Index j = 0; j < u->cols(); ++j)
            if (abs((*u)(i, j)) > bound) return std::nullopt;
    for (int f = 0; f < m1.polytope().facet_count(); ++f) {
        const IntVec image = (*u) * m1.label(f);
        if (!vec_equal(image, m2.label(f))) return std::nullopt;
    }
    return u;
}

OmniorientedModel::OmniorientedModel(CharacteristicModel model)
    : model_(std::move(model)), orientation_(canonical_orientation(model_.polytope())),
      facet_signs_(static_cast<std::size_t>(model_.polytope().facet_count()), 1) {}

OmniorientedModel::OmniorientedModel(CharacteristicModel model, OrientationDatum orientation,
                                     std::vector<int> facet_signs)
    : model_(std::move(model)), orientation_(std::move(orientation)),
      facet_signs_(std::move(facet_signs)) {
    if (orientation_.vertex_count() != model_.polytope().vertex_count())
        throw std::invalid_argument("OmniorientedModel: orientation size mismatch");
    if (static_cast<int>(facet_signs_.size()) != model_.polytope().facet_count())
        throw std::invalid_argument("OmniorientedModel: facet sign count mismatch");
    for (int s : facet_signs_) {
        if (s != 1 && s != -1)
            throw std::invalid_argument("OmniorientedModel: facet signs must be +-1");
    }
}

IntVec OmniorientedModel::effective_label(int facet) const {
    IntVec l = model_.label(facet);
    if (facet_signs_.at(static_cast<std::size_t>(facet)) < 0) l = -l;
    return l;
}

IntMat OmniorientedModel::vertex_label_matrix(int v) const {
    const FacetSet& vs = polytope().vertex(v);
    IntMat m(polytope().dim(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j)
        m.col(static_cast<Eigen::Index>(j)) = effective_label(vs[j]);
    return m;
}

OmniorientedModel OmniorientedModel::with_reversed_orientation() const {
    return OmniorientedModel(model_, orientation_.reversed(), facet_signs_);
}

OmniorientedModel OmniorientedModel::with_facet_flipped(int facet) const {
    std::vector<int> signs = facet_signs_;
    signs.at(static_cast<std::size_t>(facet)) = -signs.at(static_cast<std::size_t>(facet));
    return OmniorientedModel(model_, orientation_, std::move(signs));
}

int vertex_sign(const OmniorientedModel& m, int v) {
    return m.orientation().sign(v) * sign_of(det(m.vertex_label_matrix(v)));
}

}  // namespace qtcob

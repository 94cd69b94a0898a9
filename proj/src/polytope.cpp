#include "qtcob/polytope.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace qtcob {

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i];
    }
    return out;
}

// Ridges (shared (dim-1)-subsets) -> incident vertex indices.
std::map<FacetSet, std::vector<int>> ridge_map(const std::vector<FacetSet>& vertices) {
    std::map<FacetSet, std::vector<int>> ridges;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const FacetSet& vs = vertices[v];
        for (std::size_t skip = 0; skip < vs.size(); ++skip) {
            FacetSet ridge;
            ridge.reserve(vs.size() - 1);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != skip) ridge.push_back(vs[i]);
            ridges[ridge].push_back(static_cast<int>(v));
        }
    }
    return ridges;
}

}  // namespace

Polytope::Polytope(int dim, std::vector<std::string> facet_names,
                   std::vector<FacetSet> vertices)
    : dim_(dim), facet_names_(std::move(facet_names)), vertices_(std::move(vertices)) {
    ValidationReport report;
    if (dim_ < 1)
        report.add({"polytope/dim", "dimension must be a positive integer", {}});

    std::set<std::string> seen_names;
    for (const std::string& name : facet_names_) {
        if (!seen_names.insert(name).second)
            report.add({"polytope/duplicate-facet", "duplicate facet id '" + name + "'", {name}});
    }
    if (vertices_.empty())
        report.add({"polytope/no-vertices", "a polytope has at least dim+1 vertices", {}});

    const int m = static_cast<int>(facet_names_.size());
    for (FacetSet& v : vertices_) {
        std::sort(v.begin(), v.end());
        for (int f : v) {
            if (f < 0 || f >= m) {
                report.add({"polytope/unknown-facet", "vertex references facet index out of range", {}});
                break;
            }
        }
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            report.add({"polytope/duplicate-in-vertex",
                        "a vertex lists the same facet twice",
                        facet_names_of(v)});
    }
    if (!report.ok) throw ModelError("invalid polytope", report);

    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const FacetSet& v = vertices_[i];
        if (static_cast<int>(v.size()) != dim_)
            report.add({"polytope/vertex-size",
                        "vertex has " + std::to_string(v.size()) + " facets, expected " +
                            std::to_string(dim_) + " (simplicity)",
                        facet_names_of(v)});
        if (i > 0 && vertices_[i - 1] == v)
            report.add({"polytope/duplicate-vertex", "duplicate vertex", facet_names_of(v)});
    }
    if (!report.ok) throw ModelError("invalid polytope", report);

    // Facet support: each facet bounds a simple (dim-1)-polytope with at
    // least dim vertices.
    std::vector<int> support(static_cast<std::size_t>(m), 0);
    for (const FacetSet& v : vertices_)
        for (int f : v) ++support[static_cast<std::size_t>(f)];
    for (int f = 0; f < m; ++f) {
        if (support[static_cast<std::size_t>(f)] < dim_)
            report.add({"polytope/facet-support",
                        "facet '" + facet_names_[static_cast<std::size_t>(f)] + "' lies on " +
                            std::to_string(support[static_cast<std::size_t>(f)]) +
                            " vertices, expected at least " + std::to_string(dim_),
                        {facet_names_[static_cast<std::size_t>(f)]}});
    }

    // Dual pseudo-manifold condition: every ridge with support lies on
    // exactly two vertices.
    const auto ridges = ridge_map(vertices_);
    for (const auto& [ridge, verts] : ridges) {
        if (verts.size() != 2)
            report.add({"polytope/ridge-degree",
                        "face of codimension " + std::to_string(dim_ - 1) + " lies on " +
                            std::to_string(verts.size()) + " vertices, expected 2",
                        facet_names_of(ridge)});
    }
    if (!report.ok) throw ModelError("invalid polytope", report);

    // Connectivity of the vertex adjacency graph.
    std::vector<char> reached(vertices_.size(), 0);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = 1;
    std::vector<std::vector<int>> adj(vertices_.size());
    for (const auto& [ridge, verts] : ridges) {
        adj[static_cast<std::size_t>(verts[0])].push_back(verts[1]);
        adj[static_cast<std::size_t>(verts[1])].push_back(verts[0]);
    }
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!reached[static_cast<std::size_t>(w)]) {
                reached[static_cast<std::size_t>(w)] = 1;
                frontier.push(w);
            }
        }
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (!reached[v]) {
            report.add({"polytope/disconnected", "vertex adjacency graph is disconnected",
                        facet_names_of(vertices_[v])});
            break;
        }
    }
    if (!report.ok) throw ModelError("invalid polytope", report);

    for (std::size_t i = 0; i < vertices_.size(); ++i)
        vertex_lookup_[vertices_[i]] = static_cast<int>(i);
}

Polytope Polytope::from_names(int dim, std::vector<std::string> facet_names,
                              const std::vector<std::vector<std::string>>& vertices) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < facet_names.size(); ++i)
        index.emplace(facet_names[i], static_cast<int>(i));
    std::vector<FacetSet> sets;
    sets.reserve(vertices.size());
    for (const auto& names : vertices) {
        FacetSet v;
        v.reserve(names.size());
        for (const std::string& name : names) {
            auto it = index.find(name);
            if (it == index.end()) {
                ValidationReport report;
                report.add({"polytope/unknown-facet", "vertex references unknown facet '" + name + "'", {name}});
                throw ModelError("invalid polytope", report);
            }
            v.push_back(it->second);
        }
        sets.push_back(std::move(v));
    }
    return Polytope(dim, std::move(facet_names), std::move(sets));
}

int Polytope::facet_index(const std::string& name) const {
    for (std::size_t i = 0; i < facet_names_.size(); ++i)
        if (facet_names_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown facet id '" + name + "'");
}

bool Polytope::has_facet(const std::string& name) const {
    return std::find(facet_names_.begin(), facet_names_.end(), name) != facet_names_.end();
}

int Polytope::vertex_index(const FacetSet& facets) const {
    FacetSet key = facets;
    std::sort(key.begin(), key.end());
    auto it = vertex_lookup_.find(key);
    return it == vertex_lookup_.end() ? -1 : it->second;
}

std::vector<std::string> Polytope::facet_names_of(const FacetSet& facets) const {
    std::vector<std::string> names;
    names.reserve(facets.size());
    for (int f : facets) {
        if (f >= 0 && f < static_cast<int>(facet_names_.size()))
            names.push_back(facet_names_[static_cast<std::size_t>(f)]);
    }
    return names;
}

bool Polytope::same_as(const Polytope& other) const {
    return dim_ == other.dim_ && facet_names_ == other.facet_names_ &&
           vertices_ == other.vertices_;
}

Polytope simplex(int n) {
    if (n < 1) throw std::invalid_argument("simplex: n must be >= 1 (no facets to label)");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n + 1; ++i) names.push_back("F" + std::to_string(i));
    // vertices = all n-element subsets = complements of singletons
    std::vector<FacetSet> vertices;
    for (int skip = 0; skip <= n; ++skip) {
        FacetSet v;
        for (int f = 0; f <= n; ++f)
            if (f != skip) v.push_back(f);
        vertices.push_back(std::move(v));
    }
    return Polytope(n, std::move(names), std::move(vertices));
}

namespace {
std::string fresh_name(const Polytope& p, const std::string& base) {
    if (!p.has_facet(base)) return base;
    for (int i = 2;; ++i) {
        const std::string candidate = base + "_" + std::to_string(i);
        if (!p.has_facet(candidate)) return candidate;
    }
}
}  // namespace

Polytope prism(const Polytope& p) {
    std::vector<std::string> names = p.facet_names();
    const int bottom = static_cast<int>(names.size());
    names.push_back(fresh_name(p, "BOTTOM"));
    const int top = bottom + 1;
    names.push_back(fresh_name(p, "TOP"));
    std::vector<FacetSet> vertices;
    vertices.reserve(2 * p.vertices().size());
    for (const FacetSet& v : p.vertices()) {
        FacetSet lower = v, upper = v;
        lower.push_back(bottom);
        upper.push_back(top);
        vertices.push_back(std::move(lower));
        vertices.push_back(std::move(upper));
    }
    return Polytope(p.dim() + 1, std::move(names), std::move(vertices));
}

Truncation truncate_vertex(const Polytope& q, int v) {
    if (v < 0 || v >= q.vertex_count())
        throw std::invalid_argument("truncate_vertex: vertex index out of range");
    const FacetSet cut = q.vertex(v);
    std::vector<std::string> names = q.facet_names();
    const int new_facet = static_cast<int>(names.size());
    const std::string new_name =
        fresh_name(q, "cut(" + join_names(q.facet_names_of(cut)) + ")");
    names.push_back(new_name);

    std::vector<FacetSet> vertices;
    vertices.reserve(q.vertices().size() - 1 + cut.size());
    for (int i = 0; i < q.vertex_count(); ++i) {
        if (i != v) vertices.push_back(q.vertex(i));
    }
    for (std::size_t skip = 0; skip < cut.size(); ++skip) {
        FacetSet w;
        w.reserve(cut.size());
        for (std::size_t i = 0; i < cut.size(); ++i)
            if (i != skip) w.push_back(cut[i]);
        w.push_back(new_facet);
        vertices.push_back(std::move(w));
    }
    return Truncation{Polytope(q.dim(), std::move(names), std::move(vertices)), new_name};
}

Truncation truncate_vertex(const Polytope& q, const FacetSet& vertex) {
    const int v = q.vertex_index(vertex);
    if (v < 0) throw std::invalid_argument("truncate_vertex: not a vertex of the polytope");
    return truncate_vertex(q, v);
}

std::vector<Face> faces_of_codim(const Polytope& p, int l) {
    if (l < 0 || l > p.dim())
        throw std::invalid_argument("faces_of_codim: codimension out of range [0, dim]");
    std::set<FacetSet> found;
    if (l == 0) {
        found.insert(FacetSet{});
    } else {
        std::vector<int> pick(static_cast<std::size_t>(l));
        for (const FacetSet& v : p.vertices()) {
            // all l-subsets of the vertex's dim facets
            const int n = static_cast<int>(v.size());
            std::vector<int> idx(static_cast<std::size_t>(l));
            for (int i = 0; i < l; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                FacetSet face;
                face.reserve(static_cast<std::size_t>(l));
                for (int i : idx) face.push_back(v[static_cast<std::size_t>(i)]);
                found.insert(std::move(face));
                int pos = l - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - l + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int i = pos + 1; i < l; ++i)
                    idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
    }
    std::vector<Face> faces;
    faces.reserve(found.size());
    for (const FacetSet& fs : found) faces.push_back(Face{fs, l});
    return faces;
}

std::vector<Face> edges(const Polytope& p) { return faces_of_codim(p, p.dim() - 1); }

bool is_simplex(const Polytope& p) {
    return p.facet_count() == p.dim() + 1 && p.vertex_count() == p.dim() + 1;
}

ExceptionalMarking::ExceptionalMarking(const Polytope& host, std::vector<int> facets)
    : facets_(std::move(facets)) {
    std::set<int> seen;
    for (int f : facets_) {
        if (f < 0 || f >= host.facet_count())
            throw std::invalid_argument("ExceptionalMarking: facet index out of range");
        if (!seen.insert(f).second)
            throw std::invalid_argument("ExceptionalMarking: duplicate facet '" +
                                        host.facet_name(f) + "'");
    }
    if (facets_.empty())
        throw std::invalid_argument("ExceptionalMarking: marking must be nonempty");
}

ExceptionalMarking ExceptionalMarking::from_names(const Polytope& host,
                                                  const std::vector<std::string>& names) {
    std::vector<int> facets;
    facets.reserve(names.size());
    for (const std::string& name : names) facets.push_back(host.facet_index(name));
    return ExceptionalMarking(host, std::move(facets));
}

bool ExceptionalMarking::contains(int facet) const {
    return std::find(facets_.begin(), facets_.end(), facet) != facets_.end();
}

ValidationReport validate_marking(const Polytope& p, const ExceptionalMarking& m) {
    ValidationReport report;
    for (int v = 0; v < p.vertex_count(); ++v) {
        const FacetSet& vs = p.vertex(v);
        int hits = 0;
        for (int f : vs)
            if (m.contains(f)) ++hits;
        if (hits == 0)
            report.add({"marking/uncovered", "vertex lies on no exceptional facet",
                        p.facet_names_of(vs)});
        else if (hits > 1)
            report.add({"marking/overlap", "vertex lies on two exceptional facets",
                        p.facet_names_of(vs)});
    }
    return report;
}

}  // namespace qtcob

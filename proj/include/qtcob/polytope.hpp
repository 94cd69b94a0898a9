// Combinatorial simple polytopes given by vertex-facet incidence, with face
// enumeration, prisms, vertex truncation, and exceptional-facet markings.
//
// No coordinates are stored: every construction here is determined by the
// face lattice, and faces are identified with their facet sets (unique in a
// simple polytope).

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtcob {

/// Sorted facet indices identifying a face (a vertex carries dim() of them).
using FacetSet = std::vector<int>;

struct Issue {
    std::string code;                 // stable machine id, e.g. "polytope/ridge-degree"
    std::string message;              // human-readable description
    std::vector<std::string> facets;  // witness face, as facet names
};

struct ValidationReport {
    bool ok = true;
    std::vector<Issue> issues;

    void add(Issue issue) {
        ok = false;
        issues.push_back(std::move(issue));
    }
};

/// Thrown by constructors that reject structurally invalid input.
class ModelError : public std::runtime_error {
  public:
    ModelError(std::string what, ValidationReport report)
        : std::runtime_error(std::move(what)), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

  private:
    ValidationReport report_;
};

/// A combinatorial simple n-polytope. Vertices are stored as sorted facet
/// index sets in canonical (lexicographic) order; construction validates
/// simplicity, the ridge (dual pseudo-manifold) condition, facet support,
/// and connectivity, rejecting bad incidence data with precise witnesses.
/// Immutable after construction.
class Polytope {
  public:
    Polytope(int dim, std::vector<std::string> facet_names,
             std::vector<FacetSet> vertices);

    static Polytope from_names(int dim, std::vector<std::string> facet_names,
                               const std::vector<std::vector<std::string>>& vertices);

    int dim() const { return dim_; }
    int facet_count() const { return static_cast<int>(facet_names_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    const std::vector<std::string>& facet_names() const { return facet_names_; }
    const std::string& facet_name(int f) const { return facet_names_.at(f); }
    /// Throws std::invalid_argument for an unknown name.
    int facet_index(const std::string& name) const;
    bool has_facet(const std::string& name) const;

    const std::vector<FacetSet>& vertices() const { return vertices_; }
    const FacetSet& vertex(int v) const { return vertices_.at(v); }
    /// -1 when the set is not a vertex.
    int vertex_index(const FacetSet& facets) const;

    std::vector<std::string> facet_names_of(const FacetSet& facets) const;

    /// Identical combinatorics and identical facet names.
    bool same_as(const Polytope& other) const;

  private:
    int dim_;
    std::vector<std::string> facet_names_;
    std::vector<FacetSet> vertices_;  // each sorted; list sorted lexicographically
    std::map<FacetSet, int> vertex_lookup_;
};

struct Face {
    FacetSet facet_set;
    int codim = 0;
};

/// The n-simplex with facets F1..F{n+1}. Rejects n = 0.
Polytope simplex(int n);

/// The prism P x [0,1]: side facets keep P's names, plus two new facets
/// (named "BOTTOM" and "TOP", suffixed when those names are taken).
Polytope prism(const Polytope& p);

struct Truncation {
    Polytope polytope;
    std::string new_facet;
};

/// Cuts off the given vertex; the new facet is combinatorially a simplex.
/// Throws std::invalid_argument when v is out of range.
Truncation truncate_vertex(const Polytope& q, int v);
Truncation truncate_vertex(const Polytope& q, const FacetSet& vertex);

/// Complete duplicate-free enumeration of codimension-l faces
/// (l-element facet sets with nonempty vertex support). l in [0, dim].
std::vector<Face> faces_of_codim(const Polytope& p, int l);

/// Edges: the codimension-(dim-1) faces.
std::vector<Face> edges(const Polytope& p);

/// True iff p is combinatorially a simplex.
bool is_simplex(const Polytope& p);

/// A set of pairwise disjoint facets whose vertices cover all vertices of the
/// host. Stored in the order given (component emission follows it).
class ExceptionalMarking {
  public:
    ExceptionalMarking(const Polytope& host, std::vector<int> facets);
    static ExceptionalMarking from_names(const Polytope& host,
                                         const std::vector<std::string>& names);

    const std::vector<int>& facets() const { return facets_; }
    bool contains(int facet) const;

  private:
    std::vector<int> facets_;
};

/// Checks pairwise disjointness and vertex covering; failures come with a
/// witness vertex (one lying on two marked facets, or an uncovered one).
ValidationReport validate_marking(const Polytope& p, const ExceptionalMarking& m);

}  // namespace qtcob

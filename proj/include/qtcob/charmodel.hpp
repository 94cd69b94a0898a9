// Characteristic and isotropy models over simple polytopes: validation,
// smoothness, the characteristic extension of an isotropy function,
// restriction to exceptional facets, translation equivalence, orientation
// data and vertex signs.

#pragma once

#include "qtcob/lattice.hpp"
#include "qtcob/numeric.hpp"
#include "qtcob/polytope.hpp"

#include <optional>
#include <vector>

namespace qtcob {

/// An orientation of the dual sphere of a polytope, stored as a sign per
/// vertex: +1 means the facet ordering "sorted by facet index" is positive at
/// that vertex. Coherence across every edge (adjacent vertices induce
/// opposite orientations on their shared ridge) characterises validity.
class OrientationDatum {
  public:
    explicit OrientationDatum(std::vector<int> vertex_signs);

    int sign(int vertex) const { return signs_.at(vertex); }
    int vertex_count() const { return static_cast<int>(signs_.size()); }
    OrientationDatum reversed() const;

  private:
    std::vector<int> signs_;
};

/// The canonical orientation: propagated from the lexicographically least
/// vertex (assigned +1). Deterministic; exists for every valid polytope.
OrientationDatum canonical_orientation(const Polytope& p);

/// Coherence check across all edges (property-test hook).
bool orientation_consistent(const Polytope& p, const OrientationDatum& d);

/// A polytope with an integer vector label of length dim on every facet.
/// The constructor checks shape only (lengths, one label per facet);
/// the independence conditions are checked by validate_characteristic so
/// that invalid labelings can be loaded and reported on.
class CharacteristicModel {
  public:
    CharacteristicModel(Polytope polytope, std::vector<IntVec> labels_by_facet);

    const Polytope& polytope() const { return polytope_; }
    const IntVec& label(int facet) const { return labels_.at(facet); }
    const std::vector<IntVec>& labels() const { return labels_; }

    /// Columns are the labels of v's facets in sorted facet-index order.
    IntMat vertex_label_matrix(int v) const;

  private:
    Polytope polytope_;
    std::vector<IntVec> labels_;
};

/// Labels at every vertex must be linearly independent over the integers;
/// failures carry the vertex as witness. (Vertex checks dominate: every
/// face's facet set extends to a vertex's in a simple polytope.)
ValidationReport validate_characteristic(const CharacteristicModel& m);

/// Determinant of the labels at v, columns in sorted facet-index order.
Int vertex_determinant(const CharacteristicModel& m, int v);

/// |det| per vertex: the local group orders of the model.
std::vector<Int> vertex_orders(const CharacteristicModel& m);

/// True iff every vertex determinant is +-1.
bool is_smooth(const CharacteristicModel& m);

/// A polytope with exceptional facets and labels of length dim-1 on the
/// remaining facets. Shape checks in the constructor; semantics (marking
/// validity and independence) via validate_isotropy.
class IsotropyModel {
  public:
    IsotropyModel(Polytope polytope, ExceptionalMarking marking,
                  std::vector<std::optional<IntVec>> labels_by_facet);

    const Polytope& polytope() const { return polytope_; }
    const ExceptionalMarking& marking() const { return marking_; }
    bool is_exceptional(int facet) const { return marking_.contains(facet); }
    /// Throws std::invalid_argument for exceptional facets.
    const IntVec& label(int facet) const;

    int label_rank() const { return polytope_.dim() - 1; }

  private:
    Polytope polytope_;
    ExceptionalMarking marking_;
    std::vector<std::optional<IntVec>> labels_;
};

/// Marking validity plus independence of the non-exceptional labels at every
/// vertex (which dominates all smaller nonempty intersections).
ValidationReport validate_isotropy(const IsotropyModel& m);

/// Extends the isotropy labels to a full characteristic model on the same
/// polytope: exceptional facets get (0,...,0,1) in Z^{dim}, the others get
/// their label with a 0 appended. Valid input yields valid output.
CharacteristicModel extend_to_characteristic(const IsotropyModel& m);

/// Restriction of an isotropy model to one exceptional facet, viewed as a
/// polytope in its own right. Keeps the host's facet names and remembers the
/// vertex correspondence (needed for induced orientations).
struct Restriction {
    CharacteristicModel model;
    std::vector<int> source_vertex;  // restricted vertex index -> host vertex index
    std::vector<int> source_facet;   // restricted facet index -> host facet index
};

Restriction restrict_component(const IsotropyModel& m, int exceptional_facet);

/// The model part of restrict_component. Throws when q is not exceptional.
CharacteristicModel restrict_to_exceptional(const IsotropyModel& m, int exceptional_facet);

/// Orientation induced on a restricted component by a host orientation:
/// the oriented-link rule (exceptional facet moved to the front of the
/// positive ordering at each host vertex).
OrientationDatum induced_orientation(const Polytope& host, const OrientationDatum& host_datum,
                                     int exceptional_facet, const Restriction& r);

/// Searches for a unimodular matrix u with u * labels1(F) = labels2(F) for
/// every facet F, all |entries| <= bound. The polytopes must agree (same
/// facet names); facet identification is fixed, so u is unique over Q when
/// it exists. nullopt means "not found (bounded)".
std::optional<IntMat> delta_translation(const CharacteristicModel& m1,
                                        const CharacteristicModel& m2,
                                        const Int& bound);

/// A characteristic model with a global orientation and a sign choice per
/// facet (a facet flip reverses that characteristic vector everywhere).
class OmniorientedModel {
  public:
    /// Canonical orientation, all facet signs +1.
    explicit OmniorientedModel(CharacteristicModel model);
    OmniorientedModel(CharacteristicModel model, OrientationDatum orientation,
                      std::vector<int> facet_signs);

    const CharacteristicModel& model() const { return model_; }
    const Polytope& polytope() const { return model_.polytope(); }
    const OrientationDatum& orientation() const { return orientation_; }
    int facet_sign(int facet) const { return facet_signs_.at(facet); }
    const std::vector<int>& facet_signs() const { return facet_signs_; }

    IntVec effective_label(int facet) const;
    /// Columns are effective labels at v in sorted facet-index order.
    IntMat vertex_label_matrix(int v) const;

    OmniorientedModel with_reversed_orientation() const;
    OmniorientedModel with_facet_flipped(int facet) const;

  private:
    CharacteristicModel model_;
    OrientationDatum orientation_;
    std::vector<int> facet_signs_;
};

/// Sign of the vertex determinant taken in the orientation's positive facet
/// ordering. +-1 at nondegenerate vertices, 0 only on invalid models.
int vertex_sign(const OmniorientedModel& m, int v);

}  // namespace qtcob

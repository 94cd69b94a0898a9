// Fixed-point localization oracle: exact Chern numbers of smooth
// omnioriented models from vertex weights and signs, and verification that
// emitted relations have vanishing signed Chern sums.

#pragma once

#include "qtcob/charmodel.hpp"
#include "qtcob/cobordism.hpp"

#include <vector>

namespace qtcob {

/// Non-increasing positive parts; indexes the Chern number c_omega.
class Partition {
  public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const;
    std::string str() const;  // e.g. "(2,1)"

  private:
    std::vector<int> parts_;
};

/// All partitions of n, largest-first lexicographic order. Deterministic.
std::vector<Partition> partitions_of(int n);

/// Tangent data at one fixed point: the basis dual to the facet labels,
/// plus the orientation-comparison sign.
struct VertexWeights {
    std::vector<IntVec> weights;
    int sign = +1;
};

/// Requires |vertex determinant| = 1 at v; throws std::invalid_argument at a
/// non-smooth vertex.
VertexWeights tangent_weights(const OmniorientedModel& m, int v);

/// One VertexWeights per vertex; throws on non-smooth models.
std::vector<VertexWeights> weight_system(const OmniorientedModel& m);

struct ChernEvaluation {
    Int value;
    std::vector<std::vector<long long>> points;  // the two generic points used
};

/// Exact Chern number c_omega of the stably complex structure the
/// omniorientation determines. Evaluated at two deterministic generic
/// rational points (consecutive primes, advancing past degeneracies); the
/// evaluations must agree and be integral or an internal error is raised.
Int chern_number(const OmniorientedModel& m, const Partition& omega);
ChernEvaluation chern_number_detail(const OmniorientedModel& m, const Partition& omega);

struct PartitionSum {
    Partition partition;
    Int sum;
    std::vector<Int> per_component;
};

struct RelationVerification {
    enum class Status { pass, fail, unverifiable };
    Status status = Status::unverifiable;
    std::vector<PartitionSum> sums;             // one per partition when smooth
    std::vector<int> non_smooth_components;     // indices, when unverifiable
    std::vector<std::vector<long long>> points; // shared evaluation points
};

/// For an all-smooth relation: checks that the signed Chern sum vanishes for
/// every partition of the half-dimension. Any non-smooth component makes the
/// relation unverifiable (structural checks only).
RelationVerification verify_relation(const CobordismRelation& r);

}  // namespace qtcob

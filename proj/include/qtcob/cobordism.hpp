// Constructions emitting complex cobordism relations: the boundary
// decomposition of a labeled polytope with exceptional facets, the vanishing
// boundary relation, the decomposition of a quasitoric orbifold into fake
// weighted projective pieces, the all-vertex-cut relation, and the
// Hirzebruch-schema checker.

#pragma once

#include "qtcob/charmodel.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtcob {

/// A characteristic model whose polytope is a simplex; any dim of its dim+1
/// labels must be independent. Constructor enforces both.
class FakeWeightedProjective {
  public:
    explicit FakeWeightedProjective(CharacteristicModel model);

    const CharacteristicModel& model() const { return model_; }
    /// Sorted multiset of |det| over the vertices (local group orders).
    std::vector<Int> local_group_orders() const;

  private:
    CharacteristicModel model_;
};

struct RelationComponent {
    OmniorientedModel model;
    int sign = +1;  // contribution sign in the vanishing sum
};

/// A signed list of models asserting that the signed sum of their cobordism
/// classes vanishes. Provenance names the construction that produced it.
struct CobordismRelation {
    std::vector<RelationComponent> components;
    std::string provenance;
    std::optional<IntVec> lambda0;  // the avoidance vector, when one was used
    std::vector<std::string> notes;
};

/// One characteristic model per exceptional facet, via restriction, in
/// marking order. Throws ModelError when m fails validate_isotropy.
std::vector<CharacteristicModel> boundary_components(const IsotropyModel& m);

/// The vanishing relation carried by the boundary: all components with sign
/// +1, each carrying the orientation induced from the host polytope.
CobordismRelation boundary_relation(const IsotropyModel& m);

/// The prism/truncation pipeline behind simplex_decomposition, exposed for
/// inspection: the labeled polytope, which facet is the untouched top copy,
/// and the truncation facet per original vertex (in vertex order).
struct DecompositionPipeline {
    IsotropyModel model;
    int top_facet;
    std::vector<int> truncation_facets;
    IntVec lambda0;
};

DecompositionPipeline build_decomposition_pipeline(const CharacteristicModel& x,
                                                   std::optional<IntVec> lambda0 = std::nullopt);

/// Decomposes a valid characteristic model into fake weighted projective
/// pieces: emits the target with sign -1 and one simplex component with sign
/// +1 per vertex of the base polytope. lambda0, when absent, is picked
/// deterministically by the avoidance search; when supplied it must be
/// primitive and avoid every edge span (violations throw ModelError naming
/// the offending edge).
CobordismRelation simplex_decomposition(const CharacteristicModel& x,
                                        std::optional<IntVec> lambda0 = std::nullopt);

/// Truncates every vertex of q, marks all truncation facets, labels the
/// surviving facets by the given map (keyed by q's facet names), and returns
/// the boundary relation. Every component is a fake weighted projective
/// piece. Throws ModelError when the labels are not a valid isotropy
/// function on the truncated polytope.
CobordismRelation vertex_cut_relation(const Polytope& q,
                                      const std::map<std::string, IntVec>& labels);

struct HirzebruchReport {
    bool ok = true;
    std::vector<Issue> issues;
    std::optional<CobordismRelation> relation;  // present on pass
};

/// Checks the two schema conditions under which the boundary relation links
/// the target to smooth simplex components: (1) labels agree with the target
/// on every facet meeting the designated copy of its polytope, (2) every
/// edge not touching an exceptional facet carries a Z^n basis. Witnesses
/// name the violating facet or edge.
HirzebruchReport check_hirzebruch_schema(const CharacteristicModel& target,
                                         const IsotropyModel& q);

}  // namespace qtcob

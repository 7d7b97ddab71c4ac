#pragma once

#include <string>
#include <vector>

#include "etalehom/abelian_group.hpp"
#include "etalehom/complex.hpp"
#include "etalehom/group_model.hpp"
#include "etalehom/int_matrix.hpp"
#include "etalehom/presented.hpp"

namespace etalehom {

/// X = G/H given by the two lattice maps induced by H -> G:
///   sc_map : T_{H^sc*} -> T_{G^sc*}          (l_G x l_H)
///   sa_map : T(SA_H)   -> T(SA_G)            ((n_G+2g_G) x (n_H+2g_H))
struct EmbeddingData {
  GroupModel group;
  GroupModel subgroup;
  IntMatrix sc_map;
  IntMatrix sa_map;

  /// X = G/{1}.
  static EmbeddingData trivial_subgroup(const GroupModel& g);
  /// X = G/G, a point.
  static EmbeddingData whole_group(const GroupModel& g);

  /// Shape, characteristic and block checks (ValidationError). The commuting
  /// square is checked by build_complex.
  void validate() const;

  friend bool operator==(const EmbeddingData&, const EmbeddingData&) = default;
};

struct ComplexOptions {
  /// Negate all of d2. Homology does not see the sign; exposed for mutation tests.
  bool negate_d2 = false;
};

/// The complex  Z^{l_H} --d2--> Z^{n_H+2g_H} + Z^{l_G} --d1--> Z^{n_G+2g_G}
/// with d2 = [incl_H ; -sc_map] and d1 = [sa_map , incl_G].
/// Throws PreconditionError naming the failing entry when the square
/// sa_map * incl_H = incl_G * sc_map does not commute.
Complex3 build_complex(const EmbeddingData& e, ComplexOptions opts = {});

/// H_1 of the complex, integral (before completion).
FgAbGroup pi2_space_integral(const EmbeddingData& e, ComplexOptions opts = {});
/// pi_2(G/H)^(p'). Twist 1 when H is linear, mixed otherwise.
FgAbGroup pi2_space(const EmbeddingData& e, ComplexOptions opts = {});

struct H0Result {
  FgAbGroup group;
  /// True when H is connected, so that H_0 is pi_1(X)^(p').
  bool is_fundamental_group = false;

  std::string label() const {
    return is_fundamental_group ? "pi1(X)" : "coker invariant (pi1 not asserted)";
  }
};

/// coker(d1), integral.
FgAbGroup h0_space_integral(const EmbeddingData& e);
H0Result h0_space(const EmbeddingData& e);

/// ker d2 = 0; holds whenever the coroot embedding of H is injective.
bool h2_check(const EmbeddingData& e);

struct ExactnessReport {
  FgAbGroup pi2_space;
  FgAbGroup pi1_subgroup;
  FgAbGroup pi1_group;
  FgAbGroup pi1_space;
  /// The maps  0 -> pi2(X) -> pi1(H) -> pi1(G) -> pi1(X) -> 0  on integral
  /// presentations.
  std::vector<PresentedMap> maps;
  /// Homology at pi2(X), pi1(H), pi1(G), pi1(X), after completion.
  std::vector<FgAbGroup> homology;
  bool exact = false;
  /// rank pi2(X) - rank pi1(H) + rank pi1(G) - rank pi1(X) == 0.
  bool rank_identity = false;
};

/// Builds the low-degree fibration sequence with explicit maps and checks its
/// exactness. Throws PreconditionError when H is not connected.
ExactnessReport verify_low_degree_exactness(const EmbeddingData& e);

}  // namespace etalehom

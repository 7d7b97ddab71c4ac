#include "etalehom/complex.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"

namespace etalehom {
namespace {

std::vector<TwistBlock> normalize_blocks(std::vector<TwistBlock> blocks, std::size_t rank,
                                         const char* term) {
  if (blocks.empty()) return {TwistBlock{rank, Twist::Zero}};
  const std::size_t total = std::accumulate(
      blocks.begin(), blocks.end(), std::size_t{0},
      [](std::size_t acc, const TwistBlock& b) { return acc + b.rank; });
  if (total != rank)
    throw ValidationError(std::string("twist blocks of ") + term + " have total rank " +
                          std::to_string(total) + ", term has rank " + std::to_string(rank));
  return blocks;
}

}  // namespace

Complex3::Complex3(IntMatrix d2, IntMatrix d1, std::vector<TwistBlock> blocks2,
                   std::vector<TwistBlock> blocks1, std::vector<TwistBlock> blocks0)
    : d2_(std::move(d2)), d1_(std::move(d1)) {
  if (d2_.rows() != d1_.cols())
    throw ValidationError("complex: d2 has " + std::to_string(d2_.rows()) +
                          " rows but d1 has " + std::to_string(d1_.cols()) + " columns");
  blocks_[2] = normalize_blocks(std::move(blocks2), rank2(), "L2");
  blocks_[1] = normalize_blocks(std::move(blocks1), rank1(), "L1");
  blocks_[0] = normalize_blocks(std::move(blocks0), rank0(), "L0");

  const IntMatrix composite = d1_ * d2_;
  for (std::size_t i = 0; i < composite.rows(); ++i)
    for (std::size_t j = 0; j < composite.cols(); ++j)
      if (sgn(composite(i, j)) != 0)
        throw PreconditionError("complex: d1*d2 is nonzero at entry (" + std::to_string(i) +
                                ", " + std::to_string(j) + ") = " + composite(i, j).get_str());
}

const std::vector<TwistBlock>& Complex3::blocks(int degree) const {
  if (degree < 0 || degree > 2) throw ValidationError("complex degree must be 0, 1 or 2");
  return blocks_[degree];
}

Twist Complex3::term_twist(int degree) const {
  const auto& bs = blocks(degree);
  std::optional<Twist> t;
  for (const TwistBlock& b : bs) {
    if (b.rank == 0) continue;
    t = t ? combine(*t, b.twist) : b.twist;
  }
  return t.value_or(bs.front().twist);
}

FgAbGroup complex_homology(const Complex3& c, int degree) {
  const Twist twist = c.term_twist(degree);
  switch (degree) {
    case 0:
      return cokernel_structure(c.d1()).with_twist(twist);
    case 1: {
      const IntMatrix kernel = kernel_basis(c.d1());
      const std::optional<IntMatrix> coords = solve_integer(kernel, c.d2());
      // d1*d2 = 0 was checked at construction and the kernel is saturated.
      if (!coords) throw PreconditionError("complex: image of d2 is not inside ker d1");
      return cokernel_structure(*coords).with_twist(twist);
    }
    case 2:
      return FgAbGroup(c.rank2() - rank(c.d2()), {}, twist);
    default:
      throw ValidationError("complex degree must be 0, 1 or 2");
  }
}

}  // namespace etalehom

#include "etalehom/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"

namespace etalehom {
namespace {

bool rank_allowed(char letter, unsigned n) {
  switch (letter) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 3;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

void link(IntMatrix& a, std::size_t i, std::size_t j) {
  a(i, j) = -1;
  a(j, i) = -1;
}

IntMatrix simple_cartan_matrix(const SimpleFactor& f) {
  const std::size_t n = f.rank;
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (f.letter) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a(n - 1, n - 2) = -2;  // a_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a(n - 2, n - 1) = -2;  // a_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a(2, 1) = -2;
      break;
    case 'G':
      a(0, 1) = -3;  // a_1 short
      a(1, 0) = -1;
      break;
    default:
      throw ValidationError(std::string("unknown Cartan letter ") + f.letter);
  }
  return a;
}

}  // namespace

CartanType::CartanType(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  for (const SimpleFactor& f : factors_)
    if (!rank_allowed(f.letter, f.rank))
      throw ValidationError(std::string("invalid Cartan type ") + f.letter +
                            std::to_string(f.rank));
}

CartanType CartanType::parse(const std::string& text) {
  std::vector<SimpleFactor> factors;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.compare(i, std::string::npos, "1") == 0) return CartanType();
  while (i < text.size()) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || i - start > 4)
      throw ValidationError("cannot parse Cartan type '" + text + "'");
    factors.push_back({letter, static_cast<unsigned>(std::stoul(text.substr(start, i - start)))});
    skip_space();
    if (i < text.size()) {
      if (text[i] != 'x' && text[i] != 'X' && text[i] != '*')
        throw ValidationError("cannot parse Cartan type '" + text + "'");
      ++i;
      skip_space();
      if (i == text.size()) throw ValidationError("cannot parse Cartan type '" + text + "'");
    }
  }
  return CartanType(std::move(factors));
}

unsigned CartanType::rank() const {
  return std::accumulate(factors_.begin(), factors_.end(), 0u,
                         [](unsigned acc, const SimpleFactor& f) { return acc + f.rank; });
}

std::string CartanType::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const SimpleFactor& f : factors_) {
    if (!out.empty()) out += "x";
    out += f.letter;
    out += std::to_string(f.rank);
  }
  return out;
}

IntMatrix cartan_matrix(const CartanType& t) {
  IntMatrix a;
  for (const SimpleFactor& f : t.factors()) a = block_diagonal(a, simple_cartan_matrix(f));
  return a;
}

Integer center_order(const CartanType& t) {
  Integer order = 1;
  for (const SimpleFactor& f : t.factors()) order *= abs(determinant(simple_cartan_matrix(f)));
  return order;
}

ReductiveDatum::ReductiveDatum(std::size_t sc_rank, std::size_t cochar_rank,
                               IntMatrix coroot_embedding, std::optional<CartanType> cartan_type)
    : sc_rank_(sc_rank),
      cochar_rank_(cochar_rank),
      embedding_(std::move(coroot_embedding)),
      cartan_type_(std::move(cartan_type)) {
  if (embedding_.rows() != cochar_rank_ || embedding_.cols() != sc_rank_)
    throw ValidationError("coroot embedding is " + std::to_string(embedding_.rows()) + "x" +
                          std::to_string(embedding_.cols()) + ", expected " +
                          std::to_string(cochar_rank_) + "x" + std::to_string(sc_rank_));
  if (cartan_type_ && cartan_type_->rank() != sc_rank_)
    throw ValidationError("Cartan type " + cartan_type_->to_string() + " has rank " +
                          std::to_string(cartan_type_->rank()) + ", but sc_rank is " +
                          std::to_string(sc_rank_));
}

ReductiveDatum ReductiveDatum::torus(std::size_t n) { return {0, n, IntMatrix(n, 0)}; }

ReductiveDatum ReductiveDatum::simply_connected(const CartanType& t) {
  return {t.rank(), t.rank(), IntMatrix::identity(t.rank()), t};
}

ReductiveDatum ReductiveDatum::adjoint(const CartanType& t) {
  return {t.rank(), t.rank(), cartan_matrix(t).transposed(), t};
}

ValidationReport validate_root_datum(const ReductiveDatum& d) {
  ValidationReport report;
  if (rank(d.coroot_embedding()) != d.sc_rank())
    report.failures.push_back("coroot embedding is not injective (rank " +
                              std::to_string(rank(d.coroot_embedding())) + " < " +
                              std::to_string(d.sc_rank()) + ")");
  if (d.cartan_type()) {
    const Integer order = center_order(*d.cartan_type());
    const FgAbGroup quotient = cokernel_structure(d.coroot_embedding());
    for (const Integer& f : quotient.invariant_factors())
      if (!mpz_divisible_p(order.get_mpz_t(), f.get_mpz_t()))
        report.failures.push_back("invariant factor " + f.get_str() +
                                  " of the cocharacter/coroot quotient does not divide the "
                                  "center order " + order.get_str() + " of " +
                                  d.cartan_type()->to_string());
  }
  return report;
}

}  // namespace etalehom

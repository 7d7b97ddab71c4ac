#include "etalehom/catalog.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "etalehom/errors.hpp"
#include "etalehom/group_model.hpp"

namespace etalehom {
namespace {

constexpr unsigned long kCharacteristics[] = {0, 2, 3, 5};

GroupModel sl(unsigned n, Characteristic p, std::size_t unipotent_dim = 0) {
  return {ReductiveDatum::simply_connected(CartanType({{'A', n - 1}})), 0, unipotent_dim, p};
}

GroupModel pgl(unsigned n, Characteristic p) {
  return {ReductiveDatum::adjoint(CartanType({{'A', n - 1}})), 0, 0, p};
}

GroupModel torus(std::size_t n, Characteristic p, std::size_t unipotent_dim = 0) {
  return {ReductiveDatum::torus(n), 0, unipotent_dim, p};
}

GroupModel semi_abelian(std::size_t torus_rank, std::size_t abelian_dim, Characteristic p) {
  return {ReductiveDatum::torus(torus_rank), abelian_dim, 0, p};
}

// Columns `which` of the n x n identity.
IntMatrix unit_columns(std::size_t n, const std::vector<std::size_t>& which) {
  IntMatrix m(n, which.size());
  for (std::size_t j = 0; j < which.size(); ++j) m(which[j], j) = 1;
  return m;
}

// S(GL_a x GL_b) inside SL_{a+b}, block-diagonal, sharing the maximal torus.
EmbeddingData block_levi(unsigned a, unsigned b, Characteristic p) {
  const unsigned n = a + b;
  std::vector<std::size_t> coroots;
  std::vector<SimpleFactor> factors;
  for (unsigned i = 0; i + 1 < a; ++i) coroots.push_back(i);
  for (unsigned i = a; i + 1 < n; ++i) coroots.push_back(i);
  if (a > 1) factors.push_back({'A', a - 1});
  if (b > 1) factors.push_back({'A', b - 1});

  const IntMatrix iota_h = unit_columns(n - 1, coroots);
  GroupModel h({coroots.size(), n - 1, iota_h, CartanType(factors)}, 0, 0, p);
  return {sl(n, p), std::move(h), iota_h, IntMatrix::identity(n - 1)};
}

struct Classical {
  std::string name;
  std::function<EmbeddingData(Characteristic)> build;
  // Integral values from topology: {free rank, torsion orders}.
  std::pair<std::size_t, std::vector<long>> pi2, pi1_x, pi1_g, pi1_h;
  std::string note;
};

FgAbGroup expected(const std::pair<std::size_t, std::vector<long>>& value, Twist twist,
                   Characteristic p) {
  std::vector<Integer> orders(value.first, Integer(0));
  for (long d : value.second) orders.emplace_back(d);
  return strip_p_part(FgAbGroup::from_cyclic_orders(orders, twist), p);
}

std::vector<Classical> classical_spaces() {
  using V = std::pair<std::size_t, std::vector<long>>;
  const V zero{0, {}};
  const V z{1, {}};
  std::vector<Classical> out;

  out.push_back({"SL2", [](Characteristic p) { return EmbeddingData::trivial_subgroup(sl(2, p)); },
                 zero, zero, zero, zero, "SU(2) = S^3 is 2-connected"});
  out.push_back({"PGL2", [](Characteristic p) { return EmbeddingData::trivial_subgroup(pgl(2, p)); },
                 zero, V{0, {2}}, V{0, {2}}, zero, "PGL2(C) ~ SO(3) ~ RP^3: pi1 = Z/2, pi2 = 0"});
  for (unsigned n : {3u, 4u}) {
    out.push_back({"SL" + std::to_string(n),
                   [n](Characteristic p) { return EmbeddingData::trivial_subgroup(sl(n, p)); },
                   zero, zero, zero, zero,
                   "SU(" + std::to_string(n) + ") is simply connected, pi2 = 0 (Cartan)"});
    out.push_back({"PGL" + std::to_string(n),
                   [n](Characteristic p) { return EmbeddingData::trivial_subgroup(pgl(n, p)); },
                   zero, V{0, {long(n)}}, V{0, {long(n)}}, zero,
                   "PU(" + std::to_string(n) + ") = SU(n)/mu_n: pi1 = Z/" + std::to_string(n)});
  }
  out.push_back({"S^2 = SO3/SO2",
                 [](Characteristic p) {
                   return EmbeddingData{pgl(2, p), torus(1, p), IntMatrix(1, 0), IntMatrix{{1}}};
                 },
                 z, zero, V{0, {2}}, z,
                 "S^2: pi2 = Z, pi1 = 0; fibration SO(2) -> SO(3) -> S^2"});
  out.push_back({"SL2/T",
                 [](Characteristic p) {
                   return EmbeddingData{sl(2, p), torus(1, p), IntMatrix(1, 0), IntMatrix{{1}}};
                 },
                 z, zero, zero, z, "SU(2)/U(1) = S^2: pi2 = Z, pi1 = 0"});
  out.push_back({"SL2/B",
                 [](Characteristic p) {
                   return EmbeddingData{sl(2, p), torus(1, p, 1), IntMatrix(1, 0), IntMatrix{{1}}};
                 },
                 z, zero, zero, z, "SL2/B = P^1, homotopy equivalent to SU(2)/U(1) = S^2"});
  for (unsigned n : {2u, 3u, 4u}) {
    out.push_back({"CP^" + std::to_string(n - 1),
                   [n](Characteristic p) { return block_levi(1, n - 1, p); }, z, zero, zero, z,
                   "CP^" + std::to_string(n - 1) + " = SU(" + std::to_string(n) +
                       ")/S(U(1)xU(n-1)): pi2 = Z, pi1 = 0"});
  }
  out.push_back({"Gr(2,4)", [](Characteristic p) { return block_levi(2, 2, p); }, z, zero, zero,
                 z, "Gr(2,4) = SU(4)/S(U(2)xU(2)): pi2 = Z, pi1 = 0"});
  out.push_back({"point = SL2/SL2",
                 [](Characteristic p) { return EmbeddingData::whole_group(sl(2, p)); }, zero,
                 zero, zero, zero, "a point"});
  out.push_back({"point = PGL2/PGL2",
                 [](Characteristic p) { return EmbeddingData::whole_group(pgl(2, p)); }, zero,
                 zero, V{0, {2}}, V{0, {2}}, "a point; pi1(H) -> pi1(G) is an isomorphism"});
  out.push_back({"E (elliptic curve)",
                 [](Characteristic p) {
                   return EmbeddingData::trivial_subgroup(semi_abelian(0, 1, p));
                 },
                 zero, V{2, {}}, V{2, {}}, zero, "E(C) = S^1 x S^1: pi1 = Z^2, pi2 = 0"});
  out.push_back({"Gm-extension of E",
                 [](Characteristic p) {
                   return EmbeddingData::trivial_subgroup(semi_abelian(1, 1, p));
                 },
                 zero, V{3, {}}, V{3, {}}, zero,
                 "C^* bundle over a torus: (S^1)^3 up to homotopy, pi1 = Z^3, pi2 = 0"});
  out.push_back({"A/E (abelian surface mod elliptic curve)",
                 [](Characteristic p) {
                   return EmbeddingData{semi_abelian(0, 2, p), semi_abelian(0, 1, p),
                                        IntMatrix(0, 0), unit_columns(4, {0, 1})};
                 },
                 zero, V{2, {}}, V{4, {}}, V{2, {}},
                 "(E x E')/E = E': pi1 = Z^2, pi2 = 0"});
  out.push_back({"E6 adjoint",
                 [](Characteristic p) {
                   return EmbeddingData::trivial_subgroup(
                       {ReductiveDatum::adjoint(CartanType({{'E', 6}})), 0, 0, p});
                 },
                 zero, V{0, {3}}, V{0, {3}}, zero, "compact adjoint E6: pi1 = Z/3 = Z(E6^sc)"});
  return out;
}

void compare(std::vector<std::string>& mismatches, const std::string& what,
             const FgAbGroup& want, const FgAbGroup& got) {
  if (!(want == got))
    mismatches.push_back(what + ": expected " + want.to_string() + ", got " + got.to_string());
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> entries;
  for (const Classical& c : classical_spaces()) {
    for (unsigned long pv : kCharacteristics) {
      const Characteristic p(pv);
      EmbeddingData e = c.build(p);
      const Twist g_twist = pi1_twist(e.group);
      const Twist h_twist = pi1_twist(e.subgroup);
      const Twist pi2_twist = e.subgroup.abelian_dim() == 0 ? Twist::One : Twist::Mixed;
      CatalogEntry entry{c.name,
                         std::move(e),
                         expected(c.pi2, pi2_twist, p),
                         expected(c.pi1_x, g_twist, p),
                         expected(c.pi1_g, g_twist, p),
                         expected(c.pi1_h, h_twist, p),
                         c.note};
      entries.push_back(std::move(entry));
    }
  }
  return entries;
}

CatalogResult run_entry(const CatalogEntry& entry, const CatalogOptions& opts) {
  CatalogResult result{entry.name, entry.characteristic(), {}};
  const EmbeddingData& e = entry.embedding;
  auto finish = [&](const FgAbGroup& integral) {
    return opts.strip_p_part ? strip_p_part(integral, entry.characteristic()) : integral;
  };
  try {
    compare(result.mismatches, "pi2(X)", entry.expected_pi2,
            finish(pi2_space_integral(e, opts.complex)));
    compare(result.mismatches, "pi1(X)", entry.expected_pi1_X, finish(h0_space_integral(e)));
    compare(result.mismatches, "pi1(G)", entry.expected_pi1_G,
            finish(pi1_group_integral(e.group)));
    compare(result.mismatches, "pi1(H)", entry.expected_pi1_H,
            finish(pi1_group_integral(e.subgroup)));
    if (!pi2_group_check(e.group)) result.mismatches.push_back("pi2(G) is not zero");
    if (!h2_check(e)) result.mismatches.push_back("H2 of the complex is not zero");
    if (e.subgroup.connected() && !verify_low_degree_exactness(e).exact)
      result.mismatches.push_back("low-degree sequence is not exact");
  } catch (const std::exception& ex) {
    result.mismatches.push_back(std::string("error: ") + ex.what());
  }
  return result;
}

bool CatalogReport::all_passed() const {
  for (const CatalogResult& r : results)
    if (!r.passed()) return false;
  return true;
}

std::string CatalogReport::table() const {
  std::ostringstream out;
  std::map<unsigned long, std::pair<int, int>> per_p;
  for (const CatalogResult& r : results) {
    out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << "  [p=" << r.characteristic.value()
        << "]\n";
    for (const std::string& m : r.mismatches) out << "        " << m << "\n";
    auto& [pass, total] = per_p[r.characteristic.value()];
    pass += r.passed();
    ++total;
  }
  for (const auto& [p, counts] : per_p)
    out << "p=" << p << ": " << counts.first << "/" << counts.second << " passed\n";
  return out.str();
}

CatalogReport run_catalog(const CatalogOptions& opts) {
  CatalogReport report;
  for (const CatalogEntry& entry : catalog_entries()) report.results.push_back(run_entry(entry, opts));
  return report;
}

}  // namespace etalehom

#include "etalehom/cli/document.hpp"

#include <limits>

#include "etalehom/errors.hpp"

namespace etalehom::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxRank = 4096;

class Reader {
 public:
  std::vector<SchemaError> errors;

  void error(const std::string& pointer, const std::string& message) {
    errors.push_back({pointer, message});
  }

  std::optional<Integer> integer(const json& j, const std::string& pointer) {
    if (j.is_number_integer()) {
      if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
      return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
        return Integer(s);
      error(pointer, "'" + s + "' is not a decimal integer");
      return std::nullopt;
    }
    error(pointer, std::string("expected an integer, got ") + j.type_name());
    return std::nullopt;
  }

  std::optional<std::size_t> count(const json& parent, const std::string& key,
                                   const std::string& pointer, std::optional<std::size_t> fallback) {
    const std::string here = pointer + "/" + key;
    if (!parent.contains(key)) {
      if (!fallback) error(here, "missing required field");
      return fallback;
    }
    const std::optional<Integer> v = integer(parent[key], here);
    if (!v) return std::nullopt;
    if (*v < 0 || *v > Integer(std::to_string(kMaxRank))) {
      error(here, "must be between 0 and " + std::to_string(kMaxRank) + ", got " + v->get_str());
      return std::nullopt;
    }
    return static_cast<std::size_t>(v->get_ui());
  }

  // `rows` / `cols` may be unknown when the declaring field was itself invalid.
  std::optional<IntMatrix> matrix(const json& parent, const std::string& key,
                                  const std::string& pointer, std::optional<std::size_t> rows,
                                  std::optional<std::size_t> cols) {
    const std::string here = pointer + "/" + key;
    if (!parent.contains(key)) {
      error(here, "missing required field");
      return std::nullopt;
    }
    const json& j = parent[key];
    if (!j.is_array()) {
      error(here, std::string("expected an array of rows, got ") + j.type_name());
      return std::nullopt;
    }
    std::vector<std::vector<Integer>> data;
    bool bad = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string row_ptr = here + "/" + std::to_string(i);
      if (!j[i].is_array()) {
        error(row_ptr, std::string("expected an array, got ") + j[i].type_name());
        bad = true;
        continue;
      }
      std::vector<Integer> row;
      for (std::size_t k = 0; k < j[i].size(); ++k) {
        std::optional<Integer> x = integer(j[i][k], row_ptr + "/" + std::to_string(k));
        if (!x) bad = true;
        row.push_back(x.value_or(0));
      }
      data.push_back(std::move(row));
    }
    if (bad || !rows || !cols) return std::nullopt;

    const std::size_t got_rows = data.size();
    const std::size_t got_cols = data.empty() ? 0 : data.front().size();
    bool ragged = false;
    for (const auto& row : data) ragged |= row.size() != got_cols;
    // [] stands for any matrix without entries.
    const bool empty_ok = data.empty() && (*rows == 0 || *cols == 0);
    if (!empty_ok && (ragged || got_rows != *rows || got_cols != *cols)) {
      error(here, "expected " + std::to_string(*rows) + "x" + std::to_string(*cols) +
                      " matrix, got " +
                      (ragged ? std::string("ragged rows")
                              : std::to_string(got_rows) + "x" + std::to_string(got_cols)));
      return std::nullopt;
    }
    IntMatrix m(*rows, *cols);
    for (std::size_t i = 0; i < got_rows; ++i)
      for (std::size_t k = 0; k < got_cols; ++k) m(i, k) = data[i][k];
    return m;
  }

  std::optional<GroupModel> group(const json& root, const std::string& key, Characteristic p,
                                  bool allow_components) {
    const std::string here = "/" + key;
    const json& j = root[key];
    if (!j.is_object()) {
      error(here, std::string("expected an object, got ") + j.type_name());
      return std::nullopt;
    }
    const std::size_t before = errors.size();
    const auto sc = count(j, "sc_rank", here, std::nullopt);
    const auto cochar = count(j, "cochar_rank", here, std::nullopt);
    const auto iota = matrix(j, "coroot_embedding", here, cochar, sc);
    const auto abelian = count(j, "abelian_dim", here, 0);
    const auto unipotent = count(j, "unipotent_dim", here, 0);
    std::optional<std::size_t> components = 1;
    if (j.contains("component_group_order")) {
      components = count(j, "component_group_order", here, 1);
      if (components && !allow_components && *components != 1) {
        error(here + "/component_group_order", "the ambient group must be connected");
        components.reset();
      }
    }
    std::optional<CartanType> type;
    if (j.contains("cartan_type")) {
      if (!j["cartan_type"].is_string()) {
        error(here + "/cartan_type", "expected a string such as \"A1xB2\"");
      } else {
        try {
          type = CartanType::parse(j["cartan_type"].get<std::string>());
        } catch (const ValidationError& ex) {
          error(here + "/cartan_type", ex.what());
        }
      }
    }
    if (errors.size() != before) return std::nullopt;

    std::optional<ReductiveDatum> datum;
    try {
      datum = ReductiveDatum(*sc, *cochar, *iota, type);
    } catch (const ValidationError& ex) {
      error(here + "/cartan_type", ex.what());
      return std::nullopt;
    }
    try {
      return GroupModel(*datum, *abelian, *unipotent, p, static_cast<unsigned long>(components.value_or(1)));
    } catch (const ValidationError& ex) {
      error(here + "/component_group_order", ex.what());
      return std::nullopt;
    }
  }
};

}  // namespace

ParseOutcome parse_input(const std::string& text) {
  ParseOutcome outcome;
  Reader rd;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& ex) {
    outcome.errors.push_back({"", std::string("malformed JSON: ") + ex.what()});
    return outcome;
  }
  if (!root.is_object()) {
    outcome.errors.push_back({"", "top level must be an object"});
    return outcome;
  }
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (key != "characteristic" && key != "group" && key != "subgroup" && key != "embedding")
      rd.error("/" + key, "unknown field");
  }

  std::optional<Characteristic> p;
  if (!root.contains("characteristic")) {
    rd.error("/characteristic", "missing required field");
  } else if (auto v = rd.integer(root["characteristic"], "/characteristic")) {
    if (*v < 0 || *v > Integer(std::numeric_limits<unsigned int>::max()))
      rd.error("/characteristic", v->get_str() + " is not 0 or a prime");
    else if (*v != 0 && !is_prime(v->get_ui()))
      rd.error("/characteristic", v->get_str() + " is not prime");
    else
      p = Characteristic(v->get_ui());
  }
  if (!p) {
    outcome.errors = std::move(rd.errors);
    return outcome;
  }

  std::optional<GroupModel> g;
  if (!root.contains("group"))
    rd.error("/group", "missing required field");
  else
    g = rd.group(root, "group", *p, false);

  const bool has_sub = root.contains("subgroup");
  std::optional<GroupModel> h;
  if (has_sub) h = rd.group(root, "subgroup", *p, true);
  if (root.contains("embedding") && !has_sub)
    rd.error("/embedding", "embedding given without a subgroup");

  std::optional<IntMatrix> sc_map, sa_map;
  if (has_sub) {
    if (!root.contains("embedding")) {
      rd.error("/embedding", "missing required field");
    } else if (!root["embedding"].is_object()) {
      rd.error("/embedding", "expected an object");
    } else {
      const json& e = root["embedding"];
      auto dim = [](const std::optional<GroupModel>& m, auto f) {
        return m ? std::optional<std::size_t>(f(*m)) : std::nullopt;
      };
      auto sc_of = [](const GroupModel& m) { return m.sc_rank(); };
      auto sa_of = [](const GroupModel& m) { return m.sa_rank(); };
      sc_map = rd.matrix(e, "sc_map", "/embedding", dim(g, sc_of), dim(h, sc_of));
      sa_map = rd.matrix(e, "sa_map", "/embedding", dim(g, sa_of), dim(h, sa_of));
    }
  }
  if (!rd.errors.empty()) {
    outcome.errors = std::move(rd.errors);
    return outcome;
  }

  InputDocument doc;
  doc.has_subgroup = has_sub;
  doc.embedding = has_sub ? EmbeddingData{*g, *h, *sc_map, *sa_map}
                          : EmbeddingData::trivial_subgroup(*g);
  try {
    doc.embedding.validate();
  } catch (const ValidationError& ex) {
    outcome.errors.push_back({"/embedding/sa_map", ex.what()});
    return outcome;
  }
  outcome.document = std::move(doc);
  return outcome;
}

json integer_to_json(const Integer& x) {
  if (mpz_sizeinbase(x.get_mpz_t(), 2) <= 53) return json(x.get_si());
  return json(x.get_str());
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json group_section(const GroupModel& g, bool with_components) {
  json j = {
      {"sc_rank", g.sc_rank()},
      {"cochar_rank", g.torus_rank()},
      {"coroot_embedding", matrix_to_json(g.reductive().coroot_embedding())},
      {"abelian_dim", g.abelian_dim()},
      {"unipotent_dim", g.unipotent_dim()},
  };
  if (g.reductive().cartan_type()) j["cartan_type"] = g.reductive().cartan_type()->to_string();
  if (with_components) j["component_group_order"] = g.component_group_order();
  return j;
}

}  // namespace

json document_to_json(const EmbeddingData& e) {
  return {
      {"characteristic", e.group.characteristic().value()},
      {"group", group_section(e.group, false)},
      {"subgroup", group_section(e.subgroup, true)},
      {"embedding", {{"sc_map", matrix_to_json(e.sc_map)}, {"sa_map", matrix_to_json(e.sa_map)}}},
  };
}

json group_to_json(const FgAbGroup& g) {
  json factors = json::array();
  for (const Integer& d : g.invariant_factors()) factors.push_back(integer_to_json(d));
  return {
      {"free_rank", g.free_rank()},
      {"invariant_factors", std::move(factors)},
      {"twist", to_string(g.twist())},
      {"completion", g.completion().to_string()},
  };
}

FgAbGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("free_rank") || !j.contains("invariant_factors") ||
      !j.contains("twist") || !j.contains("completion"))
    throw ValidationError("group JSON needs free_rank, invariant_factors, twist, completion");
  if (!j["free_rank"].is_number_unsigned())
    throw ValidationError("free_rank must be a nonnegative integer");
  if (!j["twist"].is_string() || !j["completion"].is_string() ||
      !j["invariant_factors"].is_array())
    throw ValidationError("group JSON has fields of the wrong type");

  Reader rd;
  std::vector<Integer> factors;
  for (const json& f : j["invariant_factors"])
    if (auto v = rd.integer(f, "/invariant_factors")) factors.push_back(*v);
  if (!rd.errors.empty()) throw ValidationError(rd.errors.front().to_string());

  const std::optional<Twist> twist = parse_twist(j["twist"].get<std::string>());
  const std::optional<Completion> completion = Completion::parse(j["completion"].get<std::string>());
  if (!twist) throw ValidationError("unknown twist '" + j["twist"].get<std::string>() + "'");
  if (!completion)
    throw ValidationError("unknown completion '" + j["completion"].get<std::string>() + "'");
  return FgAbGroup(j["free_rank"].get<std::size_t>(), std::move(factors), *twist, *completion);
}

}  // namespace etalehom::cli

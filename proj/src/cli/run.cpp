#include "etalehom/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "etalehom/catalog.hpp"
#include "etalehom/cli/document.hpp"
#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"

namespace etalehom::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::string of = "group";
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot read input file '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

InputDocument load(const Options& opts, std::istream& in) {
  ParseOutcome parsed = parse_input(read_input(opts.input, in));
  if (!parsed.ok()) {
    std::string message = "invalid input document";
    for (const SchemaError& e : parsed.errors) message += "\n  " + e.to_string();
    throw ValidationError(message);
  }
  return std::move(*parsed.document);
}

void require_valid_datum(const GroupModel& g, const std::string& which) {
  const ValidationReport report = validate_root_datum(g.reductive());
  if (report.ok()) return;
  std::string message = "root datum of the " + which + " violates the lattice-level preconditions";
  for (const std::string& f : report.failures) message += "\n  " + f;
  throw PreconditionError(message);
}

void require_valid_data(const EmbeddingData& e) {
  require_valid_datum(e.group, "group");
  require_valid_datum(e.subgroup, "subgroup");
}

json with_diagnostics(const FgAbGroup& group, const FgAbGroup& integral, json extra) {
  json j = group_to_json(group);
  extra["integral"] = group_to_json(integral);
  j["diagnostics"] = std::move(extra);
  return j;
}

void print_diagnostics(std::ostream& out, const FgAbGroup& integral, const std::string& ranks) {
  out << "  integral: " << integral.to_string() << "\n"
      << "  " << ranks << "\n";
}

int cmd_pi1_group(const Options& opts, std::istream& in, std::ostream& out) {
  const InputDocument doc = load(opts, in);
  const bool of_group = opts.of == "group";
  const GroupModel& g = of_group ? doc.embedding.group : doc.embedding.subgroup;
  require_valid_datum(g, of_group ? "group" : "subgroup");
  const FgAbGroup integral = pi1_group_integral(g);
  const FgAbGroup group = pi1_group(g);
  const std::size_t r = rank(coroot_inclusion(g));
  if (opts.format == "json") {
    out << with_diagnostics(group, integral, {{"rank_coroot_inclusion", r}}).dump(2) << "\n";
  } else {
    out << "pi1(" << (of_group ? "G" : "H") << ") = " << group.to_string() << "\n";
    print_diagnostics(out, integral, "rank of coroot inclusion = " + std::to_string(r));
  }
  return kSuccess;
}

json differential_ranks(const Complex3& c) {
  return {{"rank_d1", rank(c.d1())}, {"rank_d2", rank(c.d2())}};
}

std::string differential_ranks_text(const Complex3& c) {
  return "rank d1 = " + std::to_string(rank(c.d1())) +
         ", rank d2 = " + std::to_string(rank(c.d2()));
}

int cmd_pi2(const Options& opts, std::istream& in, std::ostream& out) {
  const InputDocument doc = load(opts, in);
  require_valid_data(doc.embedding);
  const Complex3 c = build_complex(doc.embedding);
  const FgAbGroup integral = pi2_space_integral(doc.embedding);
  const FgAbGroup group = pi2_space(doc.embedding);
  if (opts.format == "json") {
    out << with_diagnostics(group, integral, differential_ranks(c)).dump(2) << "\n";
  } else {
    out << "pi2(X) = " << group.to_string() << "\n";
    print_diagnostics(out, integral, differential_ranks_text(c));
  }
  return kSuccess;
}

int cmd_pi1_space(const Options& opts, std::istream& in, std::ostream& out) {
  const InputDocument doc = load(opts, in);
  require_valid_data(doc.embedding);
  const Complex3 c = build_complex(doc.embedding);
  const FgAbGroup integral = h0_space_integral(doc.embedding);
  const H0Result h0 = h0_space(doc.embedding);
  if (opts.format == "json") {
    json j = with_diagnostics(h0.group, integral, differential_ranks(c));
    j["label"] = h0.label();
    j["is_fundamental_group"] = h0.is_fundamental_group;
    out << j.dump(2) << "\n";
  } else {
    out << h0.label() << " = " << h0.group.to_string() << "\n";
    print_diagnostics(out, integral, differential_ranks_text(c));
  }
  return kSuccess;
}

json blocks_to_json(const std::vector<TwistBlock>& blocks) {
  json out = json::array();
  for (const TwistBlock& b : blocks) out.push_back({{"rank", b.rank}, {"twist", to_string(b.twist)}});
  return out;
}

int cmd_complex(const Options& opts, std::istream& in, std::ostream& out) {
  const InputDocument doc = load(opts, in);
  require_valid_data(doc.embedding);
  // Construction rejects d1 * d2 != 0 with a PreconditionError.
  const Complex3 c = build_complex(doc.embedding);
  const bool zero = (c.d1() * c.d2()).is_zero();
  if (opts.format == "json") {
    json j = {
        {"ranks", {c.rank2(), c.rank1(), c.rank0()}},
        {"d2", matrix_to_json(c.d2())},
        {"d1", matrix_to_json(c.d1())},
        {"blocks", {blocks_to_json(c.blocks(2)), blocks_to_json(c.blocks(1)),
                    blocks_to_json(c.blocks(0))}},
        {"d1_d2_zero", zero},
        {"diagnostics", differential_ranks(c)},
    };
    out << j.dump(2) << "\n";
  } else {
    out << "Z^" << c.rank2() << " --d2--> Z^" << c.rank1() << " --d1--> Z^" << c.rank0() << "\n"
        << "d2 =\n" << c.d2().to_string() << "\n"
        << "d1 =\n" << c.d1().to_string() << "\n"
        << "d1*d2 = 0: " << (zero ? "verified" : "FAILED") << "\n"
        << "  " << differential_ranks_text(c) << "\n";
  }
  return zero ? kSuccess : kPreconditionFailure;
}

int cmd_verify(const Options& opts, std::istream& in, std::ostream& out) {
  const InputDocument doc = load(opts, in);
  require_valid_data(doc.embedding);
  const ExactnessReport r = verify_low_degree_exactness(doc.embedding);
  static const char* kNodes[] = {"pi2(X)", "pi1(H)", "pi1(G)", "pi1(X)"};
  if (opts.format == "json") {
    json homology = json::array();
    for (const FgAbGroup& h : r.homology) homology.push_back(group_to_json(h));
    json j = {
        {"exact", r.exact},
        {"rank_identity", r.rank_identity},
        {"pi2_X", group_to_json(r.pi2_space)},
        {"pi1_H", group_to_json(r.pi1_subgroup)},
        {"pi1_G", group_to_json(r.pi1_group)},
        {"pi1_X", group_to_json(r.pi1_space)},
        {"homology", std::move(homology)},
    };
    out << j.dump(2) << "\n";
  } else {
    out << (r.exact ? "EXACT" : "NOT EXACT") << "\n"
        << "0 -> pi2(X) -> pi1(H) -> pi1(G) -> pi1(X) -> 0\n"
        << "pi2(X) = " << r.pi2_space.to_string() << "\n"
        << "pi1(H) = " << r.pi1_subgroup.to_string() << "\n"
        << "pi1(G) = " << r.pi1_group.to_string() << "\n"
        << "pi1(X) = " << r.pi1_space.to_string() << "\n"
        << "rank identity: " << (r.rank_identity ? "holds" : "FAILS") << "\n";
    for (std::size_t i = 0; i < r.homology.size() && i < 4; ++i)
      if (!r.homology[i].is_trivial())
        out << "  homology at " << kNodes[i] << ": " << r.homology[i].to_string() << "\n";
  }
  return kSuccess;
}

int cmd_catalog(const Options& opts, std::ostream& out) {
  const CatalogReport report = run_catalog();
  if (opts.format == "json") {
    json entries = json::array();
    for (const CatalogResult& r : report.results)
      entries.push_back({{"name", r.name},
                         {"characteristic", r.characteristic.value()},
                         {"passed", r.passed()},
                         {"mismatches", r.mismatches}});
    out << json{{"all_passed", report.all_passed()}, {"entries", std::move(entries)}}.dump(2)
        << "\n";
  } else {
    out << report.table();
  }
  return report.all_passed() ? kSuccess : kGoldenSuiteFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Etale homotopy groups of algebraic groups and homogeneous spaces"};
  app.name("etalehom");
  app.require_subcommand(1);
  Options opts;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opts.input, "Input document, '-' for stdin");
  };

  CLI::App* pi1_group = app.add_subcommand("pi1-group", "pi1 of the group or the subgroup");
  pi1_group->add_option("--of", opts.of, "Which group")->check(CLI::IsMember({"group", "subgroup"}));
  CLI::App* pi2 = app.add_subcommand("pi2", "pi2 of G/H");
  CLI::App* pi1_space = app.add_subcommand("pi1-space", "pi1 of G/H (H_0 of the complex)");
  CLI::App* complex = app.add_subcommand("complex", "Dump the complex and check d1*d2 = 0");
  CLI::App* verify = app.add_subcommand("verify", "Check exactness of the low-degree sequence");
  CLI::App* catalog = app.add_subcommand("catalog", "Run the golden suite of classical spaces");
  for (CLI::App* sub : {pi1_group, pi2, pi1_space, complex, verify}) {
    add_input(sub);
    add_format(sub);
  }
  add_format(catalog);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationError;
  }

  try {
    if (pi1_group->parsed()) return cmd_pi1_group(opts, in, out);
    if (pi2->parsed()) return cmd_pi2(opts, in, out);
    if (pi1_space->parsed()) return cmd_pi1_space(opts, in, out);
    if (complex->parsed()) return cmd_complex(opts, in, out);
    if (verify->parsed()) return cmd_verify(opts, in, out);
    return cmd_catalog(opts, out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPreconditionFailure;
  }
}

}  // namespace etalehom::cli

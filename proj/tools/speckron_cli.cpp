// speckron: command-line front end.
#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "speckron/cycle_index.hpp"
#include "speckron/error.hpp"
#include "speckron/execution.hpp"
#include "speckron/json_io.hpp"
#include "speckron/kronecker.hpp"
#include "speckron/steggall.hpp"
#include "speckron/symfunc.hpp"
#include "speckron/transition.hpp"

using namespace speckron;
using nlohmann::json;

namespace {

enum class Format { Json, Text };

struct Options {
  std::string format = "json";
  int limit_n = 9;
  int threads = 0;
};

Format format_of(const Options& o) { return o.format == "text" ? Format::Text : Format::Json; }

void emit_json(const json& j) { std::cout << j.dump() << '\n'; }

// Right-aligns column 0 of each row to a common width.
void emit_rows(const std::string& header, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::cout << header << '\n';
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [value, label] : rows) {
    std::cout << "  " << std::string(width - value.size(), ' ') << value << "  " << label << '\n';
  }
}

void gate(int n, const Options& o, const char* what) {
  if (n > o.limit_n) {
    throw CapacityError(std::string(what) + " at n = " + std::to_string(n) + " exceeds --limit-n " +
                        std::to_string(o.limit_n));
  }
}

std::string tagged(std::string_view tag, const Partition& p) {
  return std::string(tag) + "[" + p.to_string() + "]";
}

void cmd_expand(const std::string& family_tag, const std::string& alpha_text, const std::string& target_text,
                const Options& o) {
  const Family family = parse_family(family_tag);
  const Partition alpha = Partition::parse(alpha_text);
  const Basis target = parse_basis(target_text);
  const auto f = convert(SymFunc::unit(family_basis(family), alpha), target);
  if (format_of(o) == Format::Json) {
    emit_json(to_json(f));
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [lambda, c] : f.terms()) rows.emplace_back(format_rational(c), tagged(basis_name(target), lambda));
  emit_rows(tagged(family_name(family), alpha) + " in basis " + std::string(basis_name(target)), rows);
}

void emit_table(const StructureConstantTable& t, std::string_view engine, const Options& o, const char* verdict) {
  if (format_of(o) == Format::Json) {
    auto j = to_json(t, engine, t.total());
    if (verdict) j["agreement"] = verdict;
    emit_json(j);
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [mu, v] : t.entries) rows.emplace_back(std::to_string(v), tagged(family_name(t.family), mu));
  std::ostringstream header;
  header << tagged(family_name(t.family), t.alpha) << " * " << tagged(family_name(t.family), t.beta) << "  ("
         << engine << ", " << t.total() << " double cosets)";
  emit_rows(header.str(), rows);
  if (verdict) std::cout << "engines " << verdict << '\n';
}

int cmd_kron(const std::string& family_tag, const std::string& a, const std::string& b, const std::string& engine,
             const Options& o) {
  const Family family = parse_family(family_tag);
  const Partition alpha = Partition::parse(a), beta = Partition::parse(b);
  if (alpha.weight() != beta.weight()) throw ParseError("partitions must have the same weight");
  if (engine == "algebraic") {
    emit_table(kron_in_basis(alpha, beta, family), engine, o, nullptr);
    return 0;
  }
  gate(alpha.weight(), o, "coset enumeration");
  const auto cosets = kron_by_cosets(alpha, beta, family);
  if (engine == "cosets") {
    emit_table(cosets, engine, o, nullptr);
    return 0;
  }
  const bool agree = cosets == kron_in_basis(alpha, beta, family);
  emit_table(cosets, engine, o, agree ? "agree" : "disagree");
  if (!agree) {
    std::cerr << "error: the algebraic and coset engines disagree\n";
    return 4;
  }
  return 0;
}

void cmd_transition(const std::string& from_text, const std::string& to_text, int n, const Options& o) {
  if (n < 0) throw ParseError("degree must be nonnegative");
  const auto m = transition(parse_basis(from_text), parse_basis(to_text), n);
  const auto& ps = m->partitions();
  if (format_of(o) == Format::Json) {
    json rows = json::array();
    for (std::size_t r = 0; r < ps.size(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < ps.size(); ++c) row.push_back(format_rational(m->at(r, c)));
      rows.push_back(row);
    }
    json parts = json::array();
    for (const auto& p : ps) parts.push_back(partition_json(p));
    emit_json({{"from", std::string(basis_name(m->from()))},
               {"to", std::string(basis_name(m->to()))},
               {"n", n},
               {"partitions", parts},
               {"matrix", rows}});
    return;
  }
  // columns are source elements, rows target elements
  std::size_t width = 1;
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (std::size_t c = 0; c < ps.size(); ++c) width = std::max(width, format_rational(m->at(r, c)).size());
  std::size_t label = 0;
  for (const auto& p : ps) label = std::max(label, p.to_string().size());
  std::cout << basis_name(m->from()) << " -> " << basis_name(m->to()) << ", n = " << n
            << " (column j expands source element j)\n";
  for (std::size_t r = 0; r < ps.size(); ++r) {
    const auto name = ps[r].to_string();
    std::cout << std::string(label - name.size(), ' ') << name << " |";
    for (std::size_t c = 0; c < ps.size(); ++c) {
      const auto v = format_rational(m->at(r, c));
      std::cout << ' ' << std::string(width - v.size(), ' ') << v;
    }
    std::cout << '\n';
  }
}

void cmd_count(const std::string& family_tag, const std::string& alpha_text, const Options& o) {
  const Family family = parse_family(family_tag);
  const Partition alpha = Partition::parse(alpha_text);
  Integer count;
  switch (family) {
    case Family::E: count = count_structures_H(alpha); break;
    case Family::C: count = count_structures_C(alpha); break;
    case Family::K: count = count_structures_K(alpha); break;
  }
  if (format_of(o) == Format::Json) {
    emit_json({{"family", std::string(family_name(family))},
               {"alpha", partition_json(alpha)},
               {"count", integer_json(count)}});
    return;
  }
  std::cout << tagged(family_name(family), alpha) << ": " << count.get_str() << " labelled structures\n";
}

int cmd_steggall(int n, const Options& o) {
  if (n < 1) throw ParseError("n must be positive");
  gate(n, o, "pattern enumeration");
  const auto counts = counts_by_stabilizer(n);
  std::uint64_t total = 0;
  for (const auto& [d, c] : counts) total += c;
  std::string verdict = "skipped";
  bool failed = false;
  if (n <= kMaxCosetDegree) {
    const auto report = verify_steggall_identity(n);
    failed = !report.passed();
    verdict = failed ? "fail" : "pass";
  }
  if (format_of(o) == Format::Json) {
    emit_json(steggall_json(n, total, counts, verdict));
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [d, c] : counts) rows.emplace_back(std::to_string(c), "stabilizer order " + std::to_string(d));
    emit_rows("n = " + std::to_string(n) + ": " + std::to_string(total) + " patterns", rows);
    std::cout << "identity check: " << verdict << '\n';
  }
  if (failed) {
    std::cerr << "error: pattern histogram does not match the structure constants\n";
    return 4;
  }
  return 0;
}

void cmd_cosets(const std::string& family_tag, const std::string& a, const std::string& b, const Options& o) {
  const Family family = parse_family(family_tag);
  const Partition alpha = Partition::parse(a), beta = Partition::parse(b);
  if (alpha.weight() != beta.weight()) throw ParseError("partitions must have the same weight");
  gate(alpha.weight(), o, "coset enumeration");
  const auto cosets = classified_double_cosets(alpha, beta, family);
  if (format_of(o) == Format::Json) {
    json list = json::array();
    for (const auto& c : cosets) {
      list.push_back({{"representative", c.representative.to_one_line_string()},
                      {"cycles", c.representative.to_cycle_string()},
                      {"size", c.size},
                      {"intersection_type", partition_json(c.intersection_type)},
                      {"intersection_order", c.intersection_order}});
    }
    emit_json({{"family", std::string(family_name(family))},
               {"alpha", partition_json(alpha)},
               {"beta", partition_json(beta)},
               {"double_cosets", list}});
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& c : cosets) {
    rows.emplace_back(std::to_string(c.size), c.representative.to_cycle_string() + "  " +
                                                  tagged(family_name(family), c.intersection_type));
  }
  emit_rows(tagged(family_name(family), alpha) + " \\ S_" + std::to_string(alpha.weight()) + " / " +
                tagged(family_name(family), beta) + "  (size, representative, intersection)",
            rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kronecker products of cyclic and set molecule cycle indices"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--limit-n", opts.limit_n, "Largest n allowed for factorial enumeration");
  app.add_option("--threads", opts.threads, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  std::string family, alpha, beta, target = "p", engine = "algebraic", from, to;
  int n = 0;
  int status = 0;

  auto* expand = app.add_subcommand("expand", "Expand a family element in a basis");
  expand->add_option("family", family, "E, C or K")->required();
  expand->add_option("alpha", alpha, "Partition, e.g. 4,2,2")->required();
  expand->add_option("--in", target, "Target basis: p, h, m, s, C, K");
  expand->callback([&] { cmd_expand(family, alpha, target, opts); });

  auto* kron = app.add_subcommand("kron", "Structure constants of a Kronecker product");
  kron->add_option("family", family, "E, C or K")->required();
  kron->add_option("alpha", alpha)->required();
  kron->add_option("beta", beta)->required();
  kron->add_option("--engine", engine, "algebraic, cosets or both")
      ->check(CLI::IsMember({"algebraic", "cosets", "both"}));
  kron->callback([&] { status = cmd_kron(family, alpha, beta, engine, opts); });

  auto* trans = app.add_subcommand("transition", "Transition matrix between two bases");
  trans->add_option("from", from)->required();
  trans->add_option("to", to)->required();
  trans->add_option("n", n)->required();
  trans->callback([&] { cmd_transition(from, to, n, opts); });

  auto* count = app.add_subcommand("count", "Number of labelled structures");
  count->add_option("family", family, "E, C or K")->required();
  count->add_option("alpha", alpha)->required();
  count->callback([&] { cmd_count(family, alpha, opts); });

  auto* steg = app.add_subcommand("steggall", "Pattern census and identity check");
  steg->add_option("n", n)->required();
  steg->callback([&] { status = cmd_steggall(n, opts); });

  auto* cos = app.add_subcommand("cosets", "Classified double cosets");
  cos->add_option("family", family, "E, C or K")->required();
  cos->add_option("alpha", alpha)->required();
  cos->add_option("beta", beta)->required();
  cos->callback([&] { cmd_cosets(family, alpha, beta, opts); });

  app.parse_complete_callback([&] {
    if (opts.threads > 0) set_thread_count(opts.threads);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}

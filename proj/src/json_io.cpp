#include "speckron/json_io.hpp"

#include "speckron/error.hpp"

namespace speckron {

using nlohmann::json;

namespace {
const Integer kMaxExactDouble = Integer(1) << 53;
}

json integer_json(const Integer& v) {
  if (abs(v) <= kMaxExactDouble) return json(v.get_si());
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError("expected an integer or a decimal string, got " + j.dump());
}

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back({{"partition", partition_json(lambda)},
                     {"num", integer_json(c.get_num())},
                     {"den", integer_json(c.get_den())}});
  }
  return {{"basis", std::string(basis_name(f.basis()))}, {"n", f.degree()}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j) {
  try {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
      Rational q(integer_from_json(t.at("num")), integer_from_json(t.at("den")));
      if (q.get_den() == 0) throw ParseError("zero denominator");
      q.canonicalize();
      f.add_term(partition_from_json(t.at("partition")), q);
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed symmetric function JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const StructureConstantTable& t, std::string_view engine, std::uint64_t double_coset_count) {
  json coefficients = json::array();
  for (const auto& [mu, v] : t.entries) {
    coefficients.push_back({{"mu", partition_json(mu)}, {"value", integer_json(Integer(static_cast<unsigned long>(v)))}});
  }
  return {{"family", std::string(family_name(t.family))},
          {"alpha", partition_json(t.alpha)},
          {"beta", partition_json(t.beta)},
          {"coefficients", coefficients},
          {"engine", std::string(engine)},
          {"double_coset_count", double_coset_count}};
}

json steggall_json(int n, std::uint64_t total, const std::map<int, std::uint64_t>& by_stabilizer,
                   std::string_view identity_check) {
  json stab = json::object();
  for (const auto& [d, c] : by_stabilizer) stab[std::to_string(d)] = c;
  return {{"n", n}, {"total", total}, {"by_stabilizer", stab}, {"identity_check", std::string(identity_check)}};
}

}  // namespace speckron

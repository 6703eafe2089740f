#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "json.hpp"
#include "speckron/kronecker.hpp"
#include "speckron/steggall.hpp"
#include "speckron/symfunc.hpp"

namespace speckron {

/// Integers up to 2^53 as JSON numbers, larger ones as decimal strings.
nlohmann::json integer_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json partition_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// {"basis":"C","n":8,"terms":[{"partition":[4,2,2],"num":1,"den":4}, ...]}
nlohmann::json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

/// {"family":"C","alpha":[6],"beta":[3,3],"coefficients":[{"mu":[3,3],"value":6}, ...],
///  "engine":"cosets","double_coset_count":44}
nlohmann::json to_json(const StructureConstantTable& t, std::string_view engine,
                       std::uint64_t double_coset_count);

/// {"n":6,"total":24,"by_stabilizer":{"1":18,...},"identity_check":"pass"}
nlohmann::json steggall_json(int n, std::uint64_t total, const std::map<int, std::uint64_t>& by_stabilizer,
                             std::string_view identity_check);

}  // namespace speckron

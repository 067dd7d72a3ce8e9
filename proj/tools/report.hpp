#pragma once

#include "hk/autgroups.hpp"
#include "hk/cones.hpp"
#include "hk/periods.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace hk::report {

using json = nlohmann::json;

// Rows of string cells; the first row is the header.
struct Table {
    std::vector<std::vector<std::string>> rows;
    std::string csv() const;
    std::string text() const;
};

json big(const BigInt& v);  // a number when it fits in 64 bits, else a decimal string
std::string group_name(const autgroups::GroupTag& g);
std::string pair_str(const BigInt& a, const BigInt& b);
json key_json(const periods::HeegnerKey& k);

Table s2_cone_table(long long e_from, long long e_to);
Table s2_wall_table(const std::vector<long long>& es);
Table fourfold_group_table(long long n, long long e_from, long long e_to);
Table excluded_table(long long m, long long n, long long gamma);

// Named tables for `reproduce`; throws UnknownTable.
const std::vector<std::string>& table_ids();
Table reproduce(const std::string& id);

}  // namespace hk::report

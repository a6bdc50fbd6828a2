#ifndef PVC_JSON_IO_HPP
#define PVC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "pvc/alpha.hpp"
#include "pvc/auction.hpp"
#include "pvc/codes.hpp"
#include "pvc/far.hpp"
#include "pvc/partition.hpp"
#include "pvc/rational.hpp"
#include "pvc/shatter.hpp"

namespace pvc {

using Json = nlohmann::json;

// Wire formats (strictly validated on input):
//   Partition:       {"side1":[ints],"side2":[ints]}
//   PartitionFamily: {"m":int,"entries":[Partition...]}
//   SetFamily:       {"m":int,"entries":[[ints]...]}
//   Rational:        {"num":int,"den":int}
//   Valuation:       tagged by "kind": additive | capped_additive |
//                    zero_one_additive | double_capped_additive | table
//   AuctionInstance: {"m":int,"v1":Valuation,"v2":Valuation}
// Parse failures throw ParseError; domain violations keep their own error
// types (OverlapError, RangeError, ...).

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(ItemSet s);
Json to_json(const Partition& p);
Json to_json(const PartitionFamily& r);
Json to_json(const SetFamily& z);

ItemSet itemset_from_json(const Json& j, Universe u, const char* what);
Partition partition_from_json(const Json& j, Universe u);
PartitionFamily family_from_json(const Json& j);
SetFamily set_family_from_json(const Json& j);

Json to_json(const ShatterReport& rep);
Json to_json(const VcReport& rep);
Json to_json(const AlphaReport& rep);
Json to_json(const FarFamilyReport& rep);
Json to_json(const SplitWitness& w);

Json to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j, Universe u);

Json to_json(const AuctionInstance& inst);
AuctionInstance instance_from_json(const Json& j);

Json to_json(const Outcome& outcome);
Json to_json(const RatioReport& rep);
Json to_json(const ReductionReport& rep);
Json to_json(const BlockReductionReport& rep);
Json to_json(const CodeBuildResult& result);

/// Parses a whole document, mapping json exceptions to ParseError.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace pvc

#endif

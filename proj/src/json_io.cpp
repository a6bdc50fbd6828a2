#include "pvc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pvc {

namespace {

void require_object(const Json& j, std::initializer_list<const char*> keys,
                    const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
    for (const char* key : keys) {
        if (!j.contains(key)) {
            throw ParseError(std::string(what) + " is missing \"" + key + "\"");
        }
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : keys) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ParseError(std::string(what) + " has an unknown key \"" + key + "\"");
        }
    }
}

std::int64_t int_field(const Json& j, const char* key, const char* what) {
    const Json& v = j.at(key);
    if (!v.is_number_integer()) {
        throw ParseError(std::string(what) + "." + key + " must be an integer");
    }
    return v.get<std::int64_t>();
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const Json& v : j) {
        if (!v.is_number_integer()) {
            throw ParseError(std::string(what) + " must hold integers only");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::int64_t> int64_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const Json& v : j) {
        if (!v.is_number_integer()) {
            throw ParseError(std::string(what) + " must hold integers only");
        }
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

Universe universe_field(const Json& j, const char* what) {
    const std::int64_t m = int_field(j, "m", what);
    if (m < 1 || m > Universe::kMaxItems) {
        throw ParseError(std::string(what) + ".m must be in [1, " +
                         std::to_string(Universe::kMaxItems) + "]");
    }
    return Universe(static_cast<int>(m));
}

}  // namespace

Json to_json(const Rational& r) {
    return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Rational rational_from_json(const Json& j) {
    require_object(j, {"num", "den"}, "rational");
    const std::int64_t den = int_field(j, "den", "rational");
    if (den == 0) throw ParseError("rational denominator must be nonzero");
    return Rational(int_field(j, "num", "rational"), den);
}

Json to_json(ItemSet s) { return Json(s.items()); }

Json to_json(const Partition& p) {
    return Json{{"side1", to_json(p.side1())}, {"side2", to_json(p.side2())}};
}

Json to_json(const PartitionFamily& r) {
    Json entries = Json::array();
    for (const Partition& p : r) entries.push_back(to_json(p));
    return Json{{"m", r.universe().size()}, {"entries", std::move(entries)}};
}

Json to_json(const SetFamily& z) {
    Json entries = Json::array();
    for (ItemSet s : z.entries()) entries.push_back(to_json(s));
    return Json{{"m", z.universe().size()}, {"entries", std::move(entries)}};
}

ItemSet itemset_from_json(const Json& j, Universe u, const char* what) {
    ItemSet s;
    for (int i : int_list(j, what)) {
        if (i < 0 || i >= u.size()) {
            throw RangeError(std::string(what) + " holds item " + std::to_string(i) +
                             " outside the universe of size " + std::to_string(u.size()));
        }
        if (s.contains(i)) {
            throw ParseError(std::string(what) + " repeats item " + std::to_string(i));
        }
        s = s | ItemSet{i};
    }
    return s;
}

Partition partition_from_json(const Json& j, Universe u) {
    require_object(j, {"side1", "side2"}, "partition");
    return Partition(u, itemset_from_json(j.at("side1"), u, "side1"),
                     itemset_from_json(j.at("side2"), u, "side2"));
}

PartitionFamily family_from_json(const Json& j) {
    require_object(j, {"m", "entries"}, "partition family");
    const Universe u = universe_field(j, "partition family");
    if (!j.at("entries").is_array()) {
        throw ParseError("partition family entries must be an array");
    }
    PartitionFamily out(u);
    for (const Json& e : j.at("entries")) out.add(partition_from_json(e, u));
    return out;
}

SetFamily set_family_from_json(const Json& j) {
    require_object(j, {"m", "entries"}, "set family");
    const Universe u = universe_field(j, "set family");
    if (!j.at("entries").is_array()) {
        throw ParseError("set family entries must be an array");
    }
    SetFamily out(u);
    for (const Json& e : j.at("entries")) out.add(itemset_from_json(e, u, "set entry"));
    return out;
}

Json to_json(const ShatterReport& rep) {
    Json witnesses = Json::array();
    for (const auto& [partition, index] : rep.witnesses) {
        witnesses.push_back(Json{{"partition", to_json(partition)}, {"index", index}});
    }
    return Json{{"target", to_json(rep.target)},
                {"shattered", rep.shattered},
                {"witnesses", std::move(witnesses)}};
}

Json to_json(const VcReport& rep) {
    return Json{{"dimension", rep.dimension}, {"witness_set", to_json(rep.witness_set)}};
}

Json to_json(const AlphaReport& rep) {
    Json out{{"alpha", to_json(rep.alpha)},
             {"best_t_index", rep.best_t_index},
             {"mode", rep.mode == AlphaMode::Exact ? "exact" : "sampled"}};
    if (rep.worst_s.has_value()) out["worst_s"] = to_json(*rep.worst_s);
    if (rep.mode == AlphaMode::Sampled) out["samples"] = rep.samples;
    return out;
}

Json to_json(const FarFamilyReport& rep) {
    return Json{{"epsilon", to_json(rep.epsilon)},
                {"k", rep.k},
                {"min_distance", rep.min_distance}};
}

Json to_json(const SplitWitness& w) {
    Json pairs = Json::array();
    for (auto [a, b] : w.pairing) pairs.push_back(Json::array({a, b}));
    return Json{{"element", w.element},
                {"pair_count", w.pair_count},
                {"pairing", std::move(pairs)}};
}

namespace {

struct ValuationWriter {
    Json operator()(const AdditiveValuation& v) const {
        return Json{{"kind", "additive"}, {"per_item", v.per_item}};
    }
    Json operator()(const CappedAdditiveValuation& v) const {
        return Json{{"kind", "capped_additive"},
                    {"per_item", v.base.per_item},
                    {"cap", v.cap}};
    }
    Json operator()(const ZeroOneAdditiveValuation& v) const {
        return Json{{"kind", "zero_one_additive"}, {"indicator", to_json(v.indicator)}};
    }
    Json operator()(const DoubleCappedAdditiveValuation& v) const {
        Json blocks = Json::array();
        for (ItemSet b : v.blocks) blocks.push_back(to_json(b));
        return Json{{"kind", "double_capped_additive"},
                    {"blocks", std::move(blocks)},
                    {"per_item", v.base.per_item},
                    {"block_caps", v.block_caps},
                    {"global_cap", v.global_cap}};
    }
    Json operator()(const TableValuation& v) const {
        return Json{{"kind", "table"}, {"values", v.values}};
    }
};

}  // namespace

Json to_json(const Valuation& v) { return std::visit(ValuationWriter{}, v.concrete()); }

Valuation valuation_from_json(const Json& j, Universe u) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw ParseError("valuation needs a \"kind\" tag");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "additive") {
        require_object(j, {"kind", "per_item"}, "additive valuation");
        return Valuation(u, AdditiveValuation{int64_list(j.at("per_item"), "per_item")});
    }
    if (kind == "capped_additive") {
        require_object(j, {"kind", "per_item", "cap"}, "capped additive valuation");
        return Valuation(
            u, CappedAdditiveValuation{
                   AdditiveValuation{int64_list(j.at("per_item"), "per_item")},
                   int_field(j, "cap", "capped additive valuation")});
    }
    if (kind == "zero_one_additive") {
        require_object(j, {"kind", "indicator"}, "zero/one additive valuation");
        return Valuation(u, ZeroOneAdditiveValuation{
                                itemset_from_json(j.at("indicator"), u, "indicator")});
    }
    if (kind == "double_capped_additive") {
        require_object(j, {"kind", "blocks", "per_item", "block_caps", "global_cap"},
                       "double-capped additive valuation");
        DoubleCappedAdditiveValuation v;
        if (!j.at("blocks").is_array()) throw ParseError("blocks must be an array");
        for (const Json& b : j.at("blocks")) {
            v.blocks.push_back(itemset_from_json(b, u, "block"));
        }
        v.base.per_item = int64_list(j.at("per_item"), "per_item");
        v.block_caps = int64_list(j.at("block_caps"), "block_caps");
        v.global_cap = int_field(j, "global_cap", "double-capped additive valuation");
        return Valuation(u, std::move(v));
    }
    if (kind == "table") {
        require_object(j, {"kind", "values"}, "table valuation");
        return Valuation(u, TableValuation{int64_list(j.at("values"), "values")});
    }
    throw ParseError("unknown valuation kind \"" + kind + "\"");
}

Json to_json(const AuctionInstance& inst) {
    return Json{{"m", inst.universe.size()},
                {"v1", to_json(inst.v1)},
                {"v2", to_json(inst.v2)}};
}

AuctionInstance instance_from_json(const Json& j) {
    require_object(j, {"m", "v1", "v2"}, "auction instance");
    const Universe u = universe_field(j, "auction instance");
    return AuctionInstance(u, valuation_from_json(j.at("v1"), u),
                           valuation_from_json(j.at("v2"), u));
}

Json to_json(const Outcome& outcome) {
    return Json{{"allocation", to_json(outcome.allocation)},
                {"welfare", outcome.welfare},
                {"payment1", outcome.payment1},
                {"payment2", outcome.payment2}};
}

Json to_json(const RatioReport& rep) {
    Json out{{"worst_ratio", to_json(rep.worst)},
             {"witness_v1", to_json(rep.witness_v1)},
             {"witness_v2", to_json(rep.witness_v2)},
             {"mode", rep.mode == RatioMode::Exact ? "exact" : "sampled"},
             {"profiles_evaluated", rep.profiles_evaluated}};
    if (rep.mode == RatioMode::Sampled) out["samples"] = rep.samples;
    return out;
}

Json to_json(const ReductionReport& rep) {
    return Json{{"target", to_json(rep.target)},
                {"small_opt", rep.small_opt},
                {"projected_welfare", rep.projected_welfare},
                {"big_outcome", to_json(rep.big_outcome)},
                {"small_allocation", to_json(rep.small_allocation)}};
}

Json to_json(const BlockReductionReport& rep) {
    return Json{{"small_opt", rep.small_opt},
                {"mapped_welfare", rep.mapped_welfare},
                {"big_outcome", to_json(rep.big_outcome)},
                {"small_allocation", to_json(rep.small_allocation)}};
}

Json to_json(const CodeBuildResult& result) {
    return Json{{"family", to_json(result.family)},
                {"attempts", result.attempts},
                {"threshold", result.threshold},
                {"target_reached", result.target_reached}};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

}  // namespace pvc

#include "autoseq/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace autoseq::io {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("field \"") + key + "\": " + e.what());
    }
}

std::vector<Residue> reduce(const std::vector<std::int64_t>& v, std::uint32_t p) {
    std::vector<Residue> out;
    for (std::int64_t x : v) {
        const std::int64_t r = x % static_cast<std::int64_t>(p);
        out.push_back(static_cast<Residue>(r < 0 ? r + p : r));
    }
    return out;
}

}  // namespace

Json series_to_json(const TruncatedSeries& s) {
    return Json{{"p", s.modulus()},
                {"coeffs", std::vector<Residue>(s.coefficients().begin(), s.coefficients().end())}};
}

TruncatedSeries series_from_json(const Json& j) {
    const auto p = field<std::uint64_t>(j, "p");
    if (!is_supported_prime(p)) throw std::invalid_argument("\"p\" must be a prime below 2^31");
    const auto coeffs = field<std::vector<std::int64_t>>(j, "coeffs");
    if (coeffs.empty()) throw std::invalid_argument("\"coeffs\" must not be empty");
    return TruncatedSeries::from_integers(static_cast<std::uint32_t>(p), coeffs);
}

Json relation_to_json(const PolyRelation& r, const std::string& series_name) {
    Json terms = Json::array();
    for (const auto& t : r.terms())
        terms.push_back({{"coeffs", t.coefficient},
                         {"kind", t.pattern.kind == ExponentPattern::Kind::power ? "power" : "frobenius"},
                         {"value", t.pattern.value}});
    return Json{{"p", r.modulus()}, {"terms", terms}, {"text", r.to_string(series_name)}};
}

PolyRelation relation_from_json(const Json& j) {
    const auto p = field<std::uint64_t>(j, "p");
    if (!is_supported_prime(p)) throw std::invalid_argument("\"p\" must be a prime below 2^31");
    std::vector<RelationTerm> terms;
    for (const auto& t : field<Json>(j, "terms")) {
        const auto kind = field<std::string>(t, "kind");
        const auto value = field<std::uint32_t>(t, "value");
        ExponentPattern pattern;
        if (kind == "power")
            pattern = ExponentPattern::power(value);
        else if (kind == "frobenius")
            pattern = ExponentPattern::frobenius(value);
        else
            throw std::invalid_argument("term kind must be \"power\" or \"frobenius\"");
        terms.push_back({reduce(field<std::vector<std::int64_t>>(t, "coeffs"), static_cast<std::uint32_t>(p)), pattern});
    }
    return PolyRelation(static_cast<std::uint32_t>(p), std::move(terms));
}

Json dfao_to_json(const Dfao& m) {
    return Json{{"alphabet", m.alphabet_size()},
                {"read_order", to_string(m.read_order())},
                {"initial", m.initial()},
                {"states", m.state_names()},
                {"transitions", m.transitions()},
                {"outputs", m.outputs()}};
}

Dfao dfao_from_json(const Json& j) {
    return Dfao(field<unsigned>(j, "alphabet"), field<std::vector<std::vector<State>>>(j, "transitions"),
                field<std::vector<Output>>(j, "outputs"), field<State>(j, "initial"),
                read_order_from_string(field<std::string>(j, "read_order")),
                j.contains("states") ? field<std::vector<std::string>>(j, "states") : std::vector<std::string>{});
}

Json kernel_report(const std::string& name, const Kernel& kernel, const RankProfile& profile) {
    Json depths = Json::array();
    for (const RankRow& row : profile.rows) {
        Json reps = Json::array();
        for (const KernelClass& c : kernel.classes) {
            if (c.scale != row.depth) continue;
            const std::size_t shown = std::min<std::size_t>(32, c.fingerprint.size());
            reps.push_back({{"i", c.scale},
                            {"r", c.residue},
                            {"prefix", std::vector<std::int64_t>(c.fingerprint.begin(),
                                                                 c.fingerprint.begin() + static_cast<std::ptrdiff_t>(shown))}});
        }
        depths.push_back({{"depth", row.depth}, {"classes", row.distinct}, {"rank", row.rank}, {"new", reps}});
    }
    Json closure = Json::array();
    for (const auto& row : kernel.closure) {
        Json r = Json::array();
        for (std::size_t t : row) r.push_back(t == Kernel::unexplored ? Json(nullptr) : Json(t));
        closure.push_back(r);
    }
    return Json{{"sequence", name},
                {"k", kernel.k},
                {"horizon", kernel.horizon},
                {"max_depth", kernel.max_depth},
                {"status", kernel_status(kernel)},
                {"closed", kernel.closed},
                {"classes", kernel.classes.size()},
                {"verified_merges", kernel.verified_merges},
                {"depths", depths},
                {"closure", closure}};
}

Json check_report(const std::vector<CheckResult>& results) {
    Json checks = Json::array();
    Json timing = Json::object();
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& r : results) {
        Json c{{"id", r.id},
               {"title", r.title},
               {"status", to_string(r.status)},
               {"horizon", r.horizon},
               {"detail", r.detail}};
        if (r.mismatch) c["mismatch"] = *r.mismatch;
        checks.push_back(std::move(c));
        timing[r.id] = r.elapsed_seconds;
        switch (r.status) {
            case CheckStatus::pass: ++pass; break;
            case CheckStatus::fail: ++fail; break;
            case CheckStatus::skipped: ++skipped; break;
        }
    }
    return Json{{"checks", checks},
                {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}},
                {"timing", timing}};
}

}  // namespace autoseq::io

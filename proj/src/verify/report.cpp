#include "fiberlab/verify.hpp"

#include <algorithm>
#include <sstream>

namespace fiberlab {

nlohmann::json report_to_json(const Report& r, bool with_timing)
{
    nlohmann::json j = {{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}, {"witness", r.witness}};
    if (with_timing) j["ms"] = r.ms;
    return j;
}

Report report_from_json(const nlohmann::json& j)
{
    Report r;
    r.check = j.at("check").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.witness = j.value("witness", nlohmann::json::object());
    r.ms = j.value("ms", 0.0);
    return r;
}

nlohmann::json reports_to_json(const std::vector<Report>& rs, bool with_timing)
{
    auto arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r, with_timing));
    return arr;
}

std::size_t failure_count(const std::vector<Report>& rs)
{
    return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [](const Report& r) { return !r.pass; }));
}

std::string format_table(const std::vector<Report>& rs)
{
    std::size_t wc = 5, wi = 8;
    for (const auto& r : rs) {
        wc = std::max(wc, r.check.size());
        wi = std::max(wi, r.instance.size());
    }
    std::ostringstream out;
    auto row = [&](const std::string& c, const std::string& i, const std::string& res) {
        out << c << std::string(wc - c.size() + 2, ' ') << i << std::string(wi - i.size() + 2, ' ') << res << '\n';
    };
    row("check", "instance", "result");
    row(std::string(wc, '-'), std::string(wi, '-'), "------");
    for (const auto& r : rs) row(r.check, r.instance, r.pass ? "PASS" : "FAIL");
    const auto failed = failure_count(rs);
    out << rs.size() << " checks, " << rs.size() - failed << " passed, " << failed << " failed\n";
    return out.str();
}

std::string describe_graph(const Graph& g)
{
    std::string out = "n=" + std::to_string(g.size()) + " [";
    bool first = true;
    for (auto [i, j] : g.edges()) {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(i + 1) + "-" + std::to_string(j + 1);
    }
    return out + "]";
}

}  // namespace fiberlab

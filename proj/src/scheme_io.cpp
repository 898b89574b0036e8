#include "fatpoints/scheme_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fatpoints {

json scheme_to_json(const FatPointScheme& Z) {
    json j;
    j["prime"] = Z.field.p();
    j["n"] = Z.n;
    json pts = json::array();
    for (const auto& p : Z.points) {
        json c = json::array();
        for (auto v : p.coords) c.push_back(v);
        pts.push_back(std::move(c));
    }
    j["points"] = std::move(pts);
    j["multiplicities"] = Z.mults;
    return j;
}

FatPointScheme scheme_from_json(const json& j) {
    if (!j.contains("prime") || !j.contains("n") || !j.contains("points") ||
        !j.contains("multiplicities"))
        throw std::invalid_argument(
            "scheme: need fields prime, n, points, multiplicities");
    FieldContext F(j.at("prime").get<std::uint32_t>());
    const int n = j.at("n").get<int>();
    std::vector<PrimePoint> pts;
    for (const auto& raw : j.at("points")) {
        std::vector<std::int64_t> c = raw.get<std::vector<std::int64_t>>();
        if (static_cast<int>(c.size()) != n + 1)
            throw std::invalid_argument("scheme: point needs n+1 coordinates");
        pts.push_back(make_point(c, F));
    }
    std::vector<int> mults = j.at("multiplicities").get<std::vector<int>>();
    return make_scheme(F, n, std::move(pts), std::move(mults));
}

FatPointScheme load_scheme(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scheme file: " + path);
    json j;
    in >> j;
    return scheme_from_json(j);
}

void save_scheme(const FatPointScheme& Z, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scheme file: " + path);
    out << scheme_to_json(Z).dump(2) << '\n';
}

json report_to_json(const CohomologyReport& rep) {
    json j;
    j["degree"] = rep.degree;
    j["rank"] = rep.rank;
    j["h0"] = rep.h0;
    j["h1"] = rep.h1;
    j["hilbert"] = rep.hilbert;
    j["degZ"] = rep.deg_scheme;
    j["prime"] = rep.prime;
    return j;
}

json bound_report_to_json(const BoundReport& rep) {
    json j;
    j["prime"] = rep.prime;
    j["n"] = rep.n;
    j["s"] = rep.s;
    j["weight"] = rep.weight;
    j["measured_reg"] = rep.measured_reg;
    json bounds = json::object();
    auto put = [&](const char* name, const std::optional<std::int64_t>& v) {
        if (!v) return;
        bounds[name] = json{{"bound", *v}, {"holds", rep.holds(*v)}};
    };
    put("segre_p2", rep.segre_p2);
    put("fulton", rep.fulton);
    put("segre_pn", rep.segre_pn);
    put("generalized_segre", rep.generalized_segre);
    put("bdp", rep.bdp);
    j["bounds"] = std::move(bounds);
    return j;
}

std::string bound_report_csv_header() {
    return "prime,n,s,weight,measured_reg,segre_p2,fulton,segre_pn,generalized_segre,bdp";
}

std::string bound_report_to_csv(const BoundReport& rep) {
    std::ostringstream os;
    auto cell = [&](const std::optional<std::int64_t>& v) {
        os << ',';
        if (v) os << *v;
    };
    os << rep.prime << ',' << rep.n << ',' << rep.s << ',' << rep.weight << ','
       << rep.measured_reg;
    cell(rep.segre_p2);
    cell(rep.fulton);
    cell(rep.segre_pn);
    cell(rep.generalized_segre);
    cell(rep.bdp);
    return os.str();
}

}  // namespace fatpoints

#include "plradon/io_json.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

namespace plradon {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

json qs3_to_json(const QS3& x) {
    return json::array({x.rat_part().num().get_str(), x.rat_part().den().get_str(),
                        x.sqrt3_part().num().get_str(), x.sqrt3_part().den().get_str()});
}

QS3 qs3_from_json(const json& j) {
    const mpz_class an(j.at(0).get<std::string>());
    const mpz_class ad(j.at(1).get<std::string>());
    const mpz_class bn(j.at(2).get<std::string>());
    const mpz_class bd(j.at(3).get<std::string>());
    return QS3(Rat(an, ad), Rat(bn, bd));
}

json point_to_json(const Point& p) { return json::array({qs3_to_json(p.x), qs3_to_json(p.y)}); }

json triangle_to_json(const StandardTriangle& t) {
    json j;
    j["centroid"] = point_to_json(t.centroid);
    j["side"] = qs3_to_json(t.side);
    j["orientation"] = t.orient == Orientation::Up ? "up" : "down";
    j["centroid_f"] = json::array({t.centroid.x.to_double(), t.centroid.y.to_double()});
    j["side_f"] = t.side.to_double();
    return j;
}

StandardTriangle triangle_from_json(const json& j) {
    StandardTriangle t;
    t.centroid = Point{qs3_from_json(j.at("centroid").at(0)), qs3_from_json(j.at("centroid").at(1))};
    t.side = qs3_from_json(j.at("side"));
    t.orient = j.at("orientation").get<std::string>() == "up" ? Orientation::Up : Orientation::Down;
    return t;
}

json meta_json(int levels, const std::string& mode, std::uint64_t seed) {
    json m;
    m["schema_version"] = kSchemaVersion;
    m["levels"] = levels;
    m["mode"] = mode;
    m["seed"] = seed;
    return m;
}

json truncation_to_json(const Truncation& tr) {
    json j;
    j["meta"] = meta_json(tr.levels, "exact", 0);
    j["catalogue"] = json::array();
    for (const auto& t : tr.catalogue) j["catalogue"].push_back(triangle_to_json(t));
    j["region"] = json::array();
    for (const auto& st : tr.region.terms) {
        json term;
        term["triangle"] = triangle_to_json(st.triangle);
        term["weight"] = st.weight;
        j["region"].push_back(term);
    }
    json gens = json::array();
    for (const auto& g : tr.generations) {
        json gj;
        gj["level"] = g.level;
        gj["foot_side"] = qs3_to_json(g.foot_side);
        gj["frame"] = triangle_to_json(g.frame);
        gens.push_back(gj);
    }
    j["generations"] = gens;
    return j;
}

namespace {

json qs3_value_pair(const QS3& x) {
    json j;
    j["exact"] = qs3_to_json(x);
    j["float"] = x.to_double();
    return j;
}

}  // namespace

template <class T>
json profile_to_json(const PLFunction<T>& f) {
    json j;
    json bps = json::array(), left = json::array(), right = json::array(), slopes = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if constexpr (std::is_same_v<T, QS3>) {
            bps.push_back(qs3_value_pair(f.breakpoints()[i]));
            left.push_back(qs3_value_pair(f.left_value(i)));
            right.push_back(qs3_value_pair(f.right_value(i)));
            if (i + 1 < f.size()) slopes.push_back(qs3_value_pair(f.slope(i)));
        } else {
            bps.push_back(f.breakpoints()[i]);
            left.push_back(f.left_value(i));
            right.push_back(f.right_value(i));
            if (i + 1 < f.size()) slopes.push_back(f.slope(i));
        }
    }
    j["breakpoints"] = bps;
    j["left"] = left;
    j["right"] = right;
    j["slopes"] = slopes;

    const auto m = pl_metrics(f);
    json mj;
    mj["lipschitz_finite"] = m.lipschitz_finite;
    json sup, integral, support, lip, dl2;
    if constexpr (std::is_same_v<T, QS3>) {
        mj["lipschitz"] = m.lipschitz_finite ? json(m.lipschitz.to_double()) : json("inf");
        mj["integral"] = m.integral.to_double();
        mj["integral_exact"] = qs3_to_json(m.integral);
        mj["sup"] = m.sup.to_double();
        mj["support_measure"] = m.support_measure.to_double();
        mj["derivative_l2_sq"] =
            m.derivative_finite ? json(m.derivative_l2_sq.to_double()) : json("inf");
    } else {
        mj["lipschitz"] = m.lipschitz_finite ? json(m.lipschitz) : json("inf");
        mj["integral"] = m.integral;
        mj["sup"] = m.sup;
        mj["support_measure"] = m.support_measure;
        mj["derivative_l2_sq"] = m.derivative_finite ? json(m.derivative_l2_sq) : json("inf");
    }
    j["metrics"] = mj;
    return j;
}

template json profile_to_json<QS3>(const PLFunction<QS3>&);
template json profile_to_json<double>(const PLFunction<double>&);

std::string sweep_to_csv(const SweepTable& table, std::uint64_t seed) {
    std::ostringstream os;
    os << "# schema_version=" << kSchemaVersion << "\n";
    os << "# levels=" << table.levels << "\n";
    os << "# grid=" << table.grid_spec << "\n";
    os << "# seed=" << seed << "\n";
    os << "# max_support=" << format_double(table.max_support) << "\n";
    os << "# max_finite_lip=" << format_double(table.max_finite_lip) << "\n";
    os << "omega_rad,lip,support,sup,integral\n";
    for (const auto& r : table.rows) {
        os << format_double(r.omega_rad) << ',' << (r.lip_finite ? format_double(r.lip) : "inf")
           << ',' << format_double(r.support) << ',' << format_double(r.sup) << ','
           << format_double(r.integral) << "\n";
    }
    return os.str();
}

std::string estimates_to_csv(const std::vector<SeminormEstimate>& rows, int levels,
                             const std::string& mode, std::uint64_t seed) {
    std::ostringstream os;
    os << "# schema_version=" << kSchemaVersion << "\n";
    os << "# levels=" << levels << "\n";
    os << "# mode=" << mode << "\n";
    os << "# seed=" << seed << "\n";
    os << "delta,value,ci_halfwidth,samples\n";
    for (const auto& e : rows) {
        os << format_double(e.delta) << ',' << format_double(e.value) << ','
           << format_double(e.ci_halfwidth) << ',' << e.samples << "\n";
    }
    return os.str();
}

}  // namespace plradon

#include "hbforge/io.hpp"

#include "hbforge/errors.hpp"

namespace hbforge {

namespace {

std::vector<std::string> split_top(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw Error("unbalanced parentheses");
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

Json numbers(const std::vector<long long>& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

}  // namespace

Json to_json(const Polynomial& p) { return p.to_string(); }

Json to_json(const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

Json to_json(const Ideal& ideal) {
    return Json{{"ring", ideal.ring().describe()}, {"generators", to_json(ideal.generators())}};
}

Json to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row_entries(i)));
    return rows;
}

Json to_json(const BettiTable& b) {
    Json a = Json::array();
    for (const auto& [i, row] : b.entries())
        for (const auto& [j, beta] : row) a.push_back(Json{{"i", i}, {"j", j}, {"beta", beta}});
    return a;
}

Json to_json(const HilbertData& h) {
    Json j{{"nvars", h.nvars},
           {"dim", h.dim},
           {"height", h.height},
           {"numerator", numbers(h.numerator)},
           {"numerator_text", h.numerator_string()},
           {"multiplicity", h.multiplicity}};
    j["regularity"] = h.regularity ? Json(*h.regularity) : Json(nullptr);
    return j;
}

Json to_json(const FreeResolution& res) {
    Json maps = Json::array();
    for (const auto& m : res.maps) maps.push_back(to_json(m));
    return Json{{"length", res.length()},
                {"minimal", res.minimal},
                {"betti", to_json(res.betti())},
                {"sequence", res.betti().to_sequence()},
                {"maps", maps}};
}

Json to_json(const BidegreeTable& t) {
    Json a = Json::array();
    for (const auto& [deg, count] : t) a.push_back(Json{{"bidegree", deg}, {"count", count}});
    return a;
}

Json to_json(const ReesPresentation& rp) {
    return Json{{"base_ring", rp.base->describe()},
                {"ambient_ring", rp.ambient->describe()},
                {"generators", to_json(rp.generators)},
                {"presentation", to_json(rp.presentation)},
                {"symmetric", to_json(rp.symmetric.generators())},
                {"rees", to_json(rp.rees.generators())},
                {"fiber", to_json(rp.fiber.generators())},
                {"spread", rp.spread},
                {"fiber_multiplicity", rp.fiber_multiplicity}};
}

Json to_json(const PointSet& ps) {
    Json pts = Json::array();
    for (const auto& p : ps.points) {
        Json c = Json::array();
        for (const auto& v : p) c.push_back(ps.field.format(v));
        pts.push_back(c);
    }
    return Json{{"field", ps.field.name()}, {"seed", ps.seed}, {"points", pts}};
}

Json to_json(const PositionReport& rep) {
    Json flags{{"generic", rep.generic}, {"tight", rep.tight}};
    flags["uniform"] = rep.uniform ? Json(*rep.uniform) : Json("untested");
    return Json{{"n", rep.n},
                {"s", rep.s},
                {"h", rep.h},
                {"flags", flags},
                {"dims", Json{{"I_s", rep.dim_is}, {"I_s+1", rep.dim_is1}, {"R1*I_s", rep.dim_r1is}}},
                {"reg", rep.reg}};
}

Json to_json(const UniformResult& u) {
    return Json{{"uniform", u.uniform}, {"witness", u.witness}, {"subset_size", u.subset_size}, {"degree", u.degree}};
}

Json to_json(const Sector2Report& rep) {
    Json j{{"skipped", rep.skipped}};
    if (rep.skipped) {
        j["reason"] = rep.skip_reason;
        return j;
    }
    j["position"] = to_json(rep.position);
    j["conditions"] = Json{{"finite_quotient", rep.finite_quotient},
                           {"minors_height", rep.minors_height},
                           {"minors_condition", rep.minors_condition},
                           {"saturation_is_I", rep.saturation_is_i}};
    auto fact = [](const Json& expected, const Json& computed) {
        return Json{{"expected", expected}, {"computed", computed}, {"pass", expected == computed}};
    };
    Json formulas{{"numerator", fact(numbers(rep.expected_numerator), numbers(rep.numerator))},
                  {"multiplicity", fact(rep.expected_multiplicity, rep.multiplicity)}};
    if (rep.condition_a()) {
        formulas["linear_type"] = fact(true, *rep.linear_type);
        formulas["rees_cm"] = fact(true, *rep.rees_cm);
        formulas["map_degree"] = fact(rep.expected_degree, *rep.degree);
    }
    j["formulas"] = formulas;
    return j;
}

Json to_json(const AcyclicityCertificate& c) {
    Json passed = Json::array();
    for (bool b : c.passed) passed.push_back(b);
    return Json{{"acyclic", c.acyclic}, {"ranks", c.ranks}, {"height_bounds", c.heights}, {"passed", passed}};
}

PolyMatrix parse_matrix_text(const RingPtr& ring, const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : split_top(text, ';')) {
        std::vector<std::string> entries;
        for (const auto& e : split_top(row, ',')) entries.push_back(trim(e));
        rows.push_back(entries);
    }
    return PolyMatrix::parse(ring, rows);
}

std::vector<Polynomial> parse_poly_list(const RingPtr& ring, const std::string& text) {
    std::vector<Polynomial> out;
    for (const auto& e : split_top(text, ',')) {
        std::string t = trim(e);
        if (!t.empty()) out.push_back(Polynomial::parse(t, ring));
    }
    return out;
}

PointSet point_set_from_json(const Json& j) {
    CoeffField f = CoeffField::parse(j.at("field").get<std::string>());
    PointSet ps;
    ps.field = f;
    ps.seed = j.value("seed", std::uint64_t{0});
    for (const auto& p : j.at("points")) {
        if (p.size() != 3) throw Error("points need three coordinates");
        Point q;
        for (int k = 0; k < 3; ++k) q[static_cast<std::size_t>(k)] = f.parse_scalar(p[static_cast<std::size_t>(k)].get<std::string>());
        ps.points.push_back(normalize_point(f, q));
    }
    return ps;
}

}  // namespace hbforge

#include <algorithm>
#include <functional>
#include <numeric>

#include "commands.hpp"
#include "latsnake/errors.hpp"
#include "latsnake/markov.hpp"
#include "latsnake/paths.hpp"

namespace latsnake::cli {

namespace {

class Table {
public:
    void add(const std::string& claim, const std::string& expected, const std::function<std::string()>& actual) {
        std::string got;
        try {
            got = actual();
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        const bool ok = got == expected;
        passed_ += ok;
        rows_.push_back({{"claim", claim}, {"expected", expected}, {"actual", got}, {"status", ok ? "PASS" : "FAIL"}});
    }

    Json report() const {
        Json r = {{"schema", 1}, {"command", "verify"}};
        r["passed"] = passed_;
        r["total"] = rows_.size();
        r["rows"] = rows_;
        return r;
    }

private:
    Json rows_ = Json::array();
    std::size_t passed_ = 0;
};

std::string value(const std::string& coeffs) { return evaluate(parse_coeffs(coeffs)).str(); }
std::string yes(bool b) { return b ? "true" : "false"; }

std::string matrix_text(const std::string& coeffs) {
    const ConvergentMatrix m = matrix(parse_coeffs(coeffs));
    return "(" + m.p.get_str() + "," + m.r.get_str() + "," + m.q.get_str() + "," + m.s.get_str() + ")";
}

std::string signs_of(const std::string& coeffs) {
    const SnakeGraph g = SnakeGraph::from_coeffs(parse_coeffs(coeffs));
    std::string s;
    for (Sign x : g.signs()) s += sign_char(x);
    return s;
}

std::string band_text(const std::string& cyclic) {
    const BandCount c = count_band_matchings(parse_cyclic(cyclic));
    return c.matchings.get_str() + " (D=" + c.D.get_str() + ")";
}

std::string word_set(const std::vector<PathRecord>& recs, const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i : idx) s += (s.empty() ? "" : " ") + recs[i].path.word();
    return s;
}

bool has_pair(const std::vector<PathRecord>& recs, std::size_t i, std::size_t j, const std::string& x,
              const std::string& y) {
    const std::string& u = recs[i].path.word();
    const std::string& v = recs[j].path.word();
    return (u == x && v == y) || (u == y && v == x);
}

}  // namespace

Json verify_report(const Config& config) {
    Table t;
    const std::string z4 = "RRURURRURRUUU", z4p = "RRRURURRUURUU";
    const std::string z3a = "RRRRUURRRUURU", z3b = "RRRRURUURRRUU";

    t.add("[1,2,4,2]", "29/20", [] { return value("1,2,4,2"); });
    t.add("[4,4]", "17/4", [] { return value("4,4"); });
    t.add("[4]", "4", [] { return value("4"); });
    t.add("[1,2,4,1]", "16/11", [] { return value("1,2,4,1"); });
    t.add("[1,2,4]", "13/9", [] { return value("1,2,4"); });
    t.add("matrix of [4,4]", "(17,4,4,1)", [] { return matrix_text("4,4"); });
    t.add("periodic [~4,4]", "2+sqrt(5)", [] { return from_periodic(parse_cyclic("4,4")).str(); });
    t.add("periodic [~1,2,4,1] = (7+sqrt(621))/22", "true",
          [] { return yes(from_periodic(parse_cyclic("1,2,4,1")) == QuadraticIrrational(7, 1, 621, 22)); });
    t.add("conjugate = (7-sqrt(621))/22", "true", [] {
        return yes(conjugate(from_periodic(parse_cyclic("1,2,4,1"))) == QuadraticIrrational(7, -1, 621, 22));
    });
    t.add("sqrt(221)/5 < sqrt(1517)/13", "true", [] {
        return yes(compare(lagrange_from_markov(5), lagrange_from_markov(13)) == std::strong_ordering::less);
    });
    t.add("sqrt(221)/5 < 3", "true", [] {
        return yes(compare(lagrange_from_markov(5), QuadraticIrrational::from_integer(3)) == std::strong_ordering::less);
    });
    t.add("1+sqrt(5) to 5 places", "3.23606", [] { return to_decimal(QuadraticIrrational(1, 1, 5, 1), 5); });
    t.add("signs of G[1,2,4,2]", "+--++++--", [] { return signs_of("1,2,4,2"); });
    t.add("cf of the G[1,2,4,2] snake", "1,2,4,2", [] {
        const SnakeGraph g = SnakeGraph::from_coeffs(parse_coeffs("1,2,4,2"));
        return format_coeffs(cf_from_snake(SnakeGraph::from_steps(g.steps())));
    });
    t.add("G[1,2,4,2] vertices/tiles/interior edges", "18/8/7", [] {
        const SnakeGraph g = SnakeGraph::from_coeffs(parse_coeffs("1,2,4,2"));
        return std::to_string(build_graph(g).vertex_count) + "/" + std::to_string(g.tile_count()) + "/" +
               std::to_string(g.tile_count() - 1);
    });
    t.add("G[1,2,4,2] matchings (brute force)", "29", [&] {
        return std::to_string(
            count_perfect_matchings(build_graph(SnakeGraph::from_coeffs(parse_coeffs("1,2,4,2"))), config.edge_cap));
    });
    t.add("band [~4,4] matchings (brute force)", "18", [&] {
        return std::to_string(count_perfect_matchings(build_graph(BandGraph(parse_cyclic("4,4"))), config.edge_cap));
    });
    t.add("zeta/zeta' continued fraction", "40199/23549", [] { return value("1,1,2,2,2,2,1,1,2,2,1,1,2,1,1,1,1"); });
    t.add("band [~4,4]", "18 (D=320)", [] { return band_text("4,4"); });
    t.add("band [~1,2,4,1]", "25 (D=621)", [] { return band_text("1,2,4,1"); });
    t.add("bands of G[1,2,4,2] (south, west)", "~4,4 ~1,2,4,1", [] {
        auto [s, w] = bands_of_snake(SnakeGraph::from_coeffs(parse_coeffs("1,2,4,2")));
        return s.str() + " " + w.str();
    });
    t.add("equal-L pair: bands isomorphic", "true", [] {
        return yes(band_isomorphic(BandGraph(parse_cyclic("2,1,1,1,1,1,1,2,1,1,2,1,1,1,1,2,1,1,2,2")),
                                   BandGraph(parse_cyclic("2,1,1,1,1,1,1,2,2,2,1,1,2,1,1,1,1,2,1,1"))));
    });
    t.add("RRRUURU in D(4,3)", "true", [] { return yes(validate_path("RRRUURU", 4, 3).size() == 7); });
    t.add("zeta/zeta' paths in D(7,6)", "true", [&] {
        const auto all = enumerate_paths(7, 6, 13);
        auto in = [&](const std::string& w) {
            return std::any_of(all.begin(), all.end(), [&](const LatticePath& p) { return p.word() == w; });
        };
        return yes(in(z4) && in(z4p));
    });
    t.add("cf of RRRUURU", "1,1,1,1,2,1,1,2,2", [] { return format_coeffs(cf_from_path("RRRUURU")); });
    t.add("cf of " + z4, "1,1,2,2,2,2,1,1,2,2,1,1,2,1,1,1,1", [&] { return format_coeffs(cf_from_path(z4)); });
    t.add("band of RRRUURU", "~2,1,1,1,1,2,1,1,2,2", [] { return band_of_path(parse_path("RRRUURU")).str(); });
    t.add("geometric snake of RRRUURU", "1,1,1,1,2,1,1,2,2",
          [] { return format_coeffs(snake_of_path_geometric(parse_path("RRRUURU")).coeffs()); });
    t.add("M(" + z4 + ")", "40199", [&] { return m_of_path(parse_path(z4)).get_str(); });
    t.add("M(" + z4p + ")", "40199", [&] { return m_of_path(parse_path(z4p)).get_str(); });
    t.add("M(" + z3a + ")", "49396", [&] { return m_of_path(parse_path(z3a)).get_str(); });
    t.add("M(" + z3b + ")", "46900", [&] { return m_of_path(parse_path(z3b)).get_str(); });
    t.add("M(christoffel(2,1))", "5", [] { return m_of_path(christoffel(2, 1)).get_str(); });
    t.add("L(christoffel(2,1))", "sqrt(221)/5", [] { return l_of_path(christoffel(2, 1)).str(); });
    t.add("L(" + z4 + ")", "sqrt(16530502037)/40189", [&] { return l_of_path(parse_path(z4)).str(); });
    t.add("L(" + z4p + ")", "sqrt(16545934157)/40547", [&] { return l_of_path(parse_path(z4p)).str(); });
    t.add("lattice points for " + z4, "4", [&] { return std::to_string(lattice_points_between(parse_path(z4))); });
    t.add("lattice points for " + z4p, "6", [&] { return std::to_string(lattice_points_between(parse_path(z4p))); });
    t.add("mutate (1,1,1)", "(1,1,2)", [] { return mutate(MarkovTriple(1, 1, 1), 1).str(); });
    t.add("mutate (1,2,5) at 1", "(2,5,29)", [] { return mutate(MarkovTriple(1, 2, 5), 1).str(); });
    t.add("m_{1/1}, m_{1/2}, m_{1/3}, m_{2/3}", "2 5 13 29", [] {
        return markov_number({1, 1}).get_str() + " " + markov_number({1, 2}).get_str() + " " +
               markov_number({1, 3}).get_str() + " " + markov_number({2, 3}).get_str();
    });
    t.add("M(christoffel(a,b)) = m_{b/a}, a+b <= 15", "true", [] {
        for (std::uint32_t a = 2; a <= 14; ++a) {
            for (std::uint32_t b = 1; b < a && a + b <= 15; ++b) {
                if (std::gcd(a, b) != 1) continue;
                if (m_of_path(christoffel(a, b)) != markov_number({b, a})) return std::string("false");
            }
        }
        return std::string("true");
    });
    t.add("first Lagrange numbers", "sqrt(5) 2*sqrt(2) sqrt(221)/5 sqrt(1517)/13", [] {
        return lagrange_from_markov(1).str() + " " + lagrange_from_markov(2).str() + " " +
               lagrange_from_markov(5).str() + " " + lagrange_from_markov(13).str();
    });
    t.add("zeta/zeta' pair equal under <_M", "true",
          [&] { return yes(compare_m(parse_path(z4), parse_path(z4p)) == std::strong_ordering::equal); });
    t.add("equal-L pair: pair equal under <_L", "true",
          [&] { return yes(compare_l(parse_path(z3a), parse_path(z3b)) == std::strong_ordering::equal); });
    t.add("D(4,3) minima under both orders", "RRURURU RRURURU", [&] {
        const auto recs = compute_records(4, 3, config.max_total, config.threads);
        const Extremes ex = extremes(recs);
        return word_set(recs, ex.min_m) + " " + word_set(recs, ex.min_l);
    });
    t.add("D(7,6) equal-M pair, snakes not isomorphic", "true", [&] {
        const auto recs = compute_records(7, 6, 13, config.threads);
        for (const MCollision& c : collision_scan(recs).m) {
            if (has_pair(recs, c.i, c.j, z4, z4p)) return yes(!c.snakes_isomorphic);
        }
        return std::string("missing");
    });
    t.add("D(8,5) equal-L pair, bands isomorphic", "true", [&] {
        const auto recs = compute_records(8, 5, 13, config.threads);
        for (const LCollision& c : collision_scan(recs).l) {
            if (has_pair(recs, c.i, c.j, z3a, z3b)) return yes(c.bands_isomorphic);
        }
        return std::string("missing");
    });
    t.add("zeta/zeta' pair has different L", "true",
          [&] { return yes(compare_l(parse_path(z4), parse_path(z4p)) != std::strong_ordering::equal); });
    t.add("max L for a+b <= 11 below 1+sqrt(5)", "true", [&] {
        const auto recs = compute_all_records(11, config.threads);
        return yes(sup_scan(recs, 11).gap_sign < 0);
    });
    t.add("limits (3+sqrt 5)/2 + 2/(3+sqrt 5) and (8+2 sqrt 5)/(3+sqrt 5) + 2/(1+sqrt 5)", "3 3", [] {
        const LimitReport r = limit_demo(1);
        return r.limit_sum.str() + " " + r.alt_sum.str();
    });
    t.add("[2,~1] and [2,2,~1]", "(3+sqrt(5))/2 (7-sqrt(5))/2", [] {
        const LimitReport r = limit_demo(1);
        return r.limit_left.str() + " " + r.alt_left.str();
    });
    return t.report();
}

}  // namespace latsnake::cli

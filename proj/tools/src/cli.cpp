#include "latsnake_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "commands.hpp"
#include "latsnake/errors.hpp"
#include "latsnake/markov.hpp"
#include "latsnake/paths.hpp"

namespace latsnake::cli {

Json coeffs_json(const Coeffs& c) { return format_coeffs(c); }

Json quad_json(const QuadraticIrrational& x, unsigned digits) {
    return {{"exact", x.str()},
            {"a", x.a().get_str()},
            {"b", x.b().get_str()},
            {"d", x.d().get_str()},
            {"c", x.c().get_str()},
            {"decimal", to_decimal(x, digits)}};
}

Json record_json(const PathRecord& r, unsigned digits) {
    return {{"word", r.path.word()},
            {"coeffs", coeffs_json(r.coeffs)},
            {"M", r.m.get_str()},
            {"L", r.l.value.str()},
            {"L_decimal", to_decimal(r.l.value, digits)},
            {"christoffel", r.christoffel}};
}

namespace {

Json header(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

std::string steps_text(const SnakeGraph& g) {
    std::string s;
    for (Step st : g.steps()) s += st == Step::North ? 'N' : 'E';
    return s;
}

std::string signs_text(std::span<const Sign> signs) {
    std::string s;
    for (Sign x : signs) s += sign_char(x);
    return s;
}

Json brute_force(const Graph& g, const Config& config) {
    if (g.edges.size() > config.edge_cap) return nullptr;
    return count_perfect_matchings(g, config.edge_cap);
}

Json cf_eval(const std::string& text) {
    const Coeffs c = parse_coeffs(text);
    Json r = header("cf eval");
    const Rational v = evaluate(c);
    r["coeffs"] = coeffs_json(c);
    r["value"] = v.str();
    r["numerator"] = v.num().get_str();
    r["denominator"] = v.den().get_str();
    Json conv = Json::array();
    for (const Rational& x : convergents(c)) conv.push_back(x.str());
    r["convergents"] = conv;
    return r;
}

Json cf_normalize(const std::string& text) {
    const Coeffs c = parse_coeffs(text);
    Json r = header("cf normalize");
    r["coeffs"] = coeffs_json(c);
    r["normalized"] = coeffs_json(normalize(c));
    return r;
}

Json cf_matrix(const std::string& text) {
    const Coeffs c = parse_coeffs(text);
    const ConvergentMatrix m = matrix(c);
    Json r = header("cf matrix");
    r["coeffs"] = coeffs_json(c);
    r["p"] = m.p.get_str();
    r["r"] = m.r.get_str();
    r["q"] = m.q.get_str();
    r["s"] = m.s.get_str();
    r["det"] = m.det().get_str();
    return r;
}

Json cf_periodic(const std::string& text, const std::string& prefix, const Config& config) {
    const Coeffs period = parse_cyclic(text);
    const Coeffs pre = prefix.empty() ? Coeffs{} : parse_coeffs(prefix);
    const QuadraticIrrational x = from_eventually_periodic(pre, period);
    Json r = header("cf periodic");
    r["prefix"] = coeffs_json(pre);
    r["period"] = coeffs_json(period);
    r["D"] = radicand(period).get_str();
    r["value"] = quad_json(x, config.digits);
    r["conjugate"] = quad_json(conjugate(x), config.digits);
    return r;
}

Json snake_build(const std::string& text, const Config& config) {
    const Coeffs c = parse_coeffs(text);
    const SnakeGraph g = SnakeGraph::from_coeffs(c);
    const Graph graph = build_graph(g);
    const SnakeCount count = count_snake_matchings(c);
    Json r = header("snake build");
    r["coeffs"] = coeffs_json(c);
    r["tiles"] = g.tile_count();
    r["interior_edges"] = g.tile_count() - 1;
    r["steps"] = steps_text(g);
    r["signs"] = signs_text(g.signs());
    r["vertices"] = graph.vertex_count;
    r["edges"] = graph.edges.size();
    r["matchings"] = count.matchings.get_str();
    r["matchings_brute_force"] = brute_force(graph, config);
    return r;
}

Json snake_bands(const std::string& text, const Config& config) {
    const Coeffs c = parse_coeffs(text);
    const SnakeGraph g = SnakeGraph::from_coeffs(c);
    Json r = header("snake bands");
    r["coeffs"] = coeffs_json(c);
    for (Gluing gluing : {Gluing::South, Gluing::West}) {
        const char* name = gluing == Gluing::South ? "south" : "west";
        try {
            const BandGraph b = band_of_snake(g, gluing);
            const BandCount count = count_band_matchings(b.cyclic_coeffs());
            r[name] = {{"band", b.str()},
                       {"matchings", count.matchings.get_str()},
                       {"D", count.D.get_str()},
                       {"matchings_brute_force", brute_force(build_glued_graph(g, gluing), config)}};
        } catch (const InvalidInput& e) {
            r[name] = {{"band", nullptr}, {"reason", e.what()}};
        }
    }
    return r;
}

Json band_count(const std::string& text, const Config& config) {
    const BandGraph b(parse_cyclic(text));
    const BandCount count = count_band_matchings(b.cyclic_coeffs());
    Json r = header("band count");
    r["band"] = b.str();
    r["tiles"] = b.tile_count();
    r["matchings"] = count.matchings.get_str();
    r["p"] = count.m.p.get_str();
    r["r"] = count.m.r.get_str();
    r["q"] = count.m.q.get_str();
    r["s"] = count.m.s.get_str();
    r["D"] = count.D.get_str();
    r["matchings_brute_force"] = brute_force(build_graph(b), config);
    return r;
}

Json path_stats(const std::string& word, const Config& config) {
    const LatticePath p = parse_path(word);
    const PathRecord rec = make_record(p);
    Json r = header("path stats");
    r["word"] = p.word();
    r["a"] = p.a();
    r["b"] = p.b();
    r["coeffs"] = coeffs_json(rec.coeffs);
    const Rational v = evaluate(rec.coeffs);
    r["fraction"] = v.str();
    r["snake"] = coeffs_json(snake_of_path(p).coeffs());
    r["band"] = band_of_path(p).str();
    r["M"] = rec.m.get_str();
    r["L"] = quad_json(rec.l.value, config.digits);
    r["D"] = rec.l.D.get_str();
    r["q_min"] = rec.l.q_min.get_str();
    r["argmin_rotation"] = rec.l.argmin_rotation;
    r["christoffel"] = rec.christoffel;
    r["lattice_points_between"] = lattice_points_between(p);
    return r;
}

Json path_enumerate(std::uint32_t a, std::uint32_t b, const Config& config) {
    Json r = header("path enumerate");
    r["a"] = a;
    r["b"] = b;
    Json rows = Json::array();
    for (const PathRecord& rec : compute_records(a, b, config.max_total, config.threads)) {
        Json row = record_json(rec, config.digits);
        row["lattice_points_between"] = lattice_points_between(rec.path);
        rows.push_back(std::move(row));
    }
    r["count"] = rows.size();
    r["rows"] = std::move(rows);
    return r;
}

Json christoffel_cmd(std::uint32_t a, std::uint32_t b, const Config& config) {
    const PathRecord rec = make_record(christoffel(a, b));
    Json r = header("christoffel");
    r["a"] = a;
    r["b"] = b;
    r["word"] = rec.path.word();
    r["M"] = rec.m.get_str();
    r["markov_number"] = markov_number({b, a}).get_str();
    r["L"] = quad_json(rec.l.value, config.digits);
    return r;
}

Json markov_number_cmd(const std::string& text, const Config& config) {
    const FareyIndex idx = parse_farey(text);
    const MarkovTriple t = markov_triple(idx);
    Json r = header("markov number");
    r["index"] = std::to_string(idx.b) + "/" + std::to_string(idx.a);
    r["triple"] = t.str();
    r["m"] = t.max().get_str();
    r["lagrange"] = quad_json(lagrange_from_markov(t.max()), config.digits);
    return r;
}

Json markov_scan(const std::string& bound) {
    const UniquenessReport rep = uniqueness_scan(parse_bigint(bound));
    Json r = header("markov scan");
    r["bound"] = rep.bound.get_str();
    r["triples"] = rep.triples.size();
    Json maxima = Json::array(), dups = Json::array();
    for (const BigInt& m : rep.maxima) maxima.push_back(m.get_str());
    for (const BigInt& m : rep.duplicates) dups.push_back(m.get_str());
    r["maxima"] = maxima;
    r["duplicates"] = dups;
    return r;
}

Json markov_lagrange(const std::string& m, const Config& config) {
    Json r = header("markov lagrange");
    const BigInt value = parse_bigint(m);
    r["m"] = value.get_str();
    r["lagrange"] = quad_json(lagrange_from_markov(value), config.digits);
    return r;
}

Json words(const std::vector<PathRecord>& recs, const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (std::size_t i : idx) out.push_back(recs[i].path.word());
    return out;
}

const char* order_name(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return "less";
    if (o == std::strong_ordering::greater) return "greater";
    return "equal";
}

Json orders_scan(std::uint32_t a, std::uint32_t b, bool collisions, bool covers, bool monotonicity,
                 const Config& config) {
    const std::vector<PathRecord> recs = compute_records(a, b, config.max_total, config.threads);
    Json r = header("orders scan");
    r["a"] = a;
    r["b"] = b;
    r["count"] = recs.size();
    const Extremes ex = extremes(recs);
    r["extremes"] = {{"min_M", words(recs, ex.min_m)},
                     {"max_M", words(recs, ex.max_m)},
                     {"min_L", words(recs, ex.min_l)},
                     {"max_L", words(recs, ex.max_l)}};
    if (collisions) {
        const CollisionReport c = collision_scan(recs);
        Json m = Json::array(), l = Json::array();
        for (const MCollision& x : c.m) {
            m.push_back({{"first", recs[x.i].path.word()},
                         {"second", recs[x.j].path.word()},
                         {"M", recs[x.i].m.get_str()},
                         {"snakes_isomorphic", x.snakes_isomorphic}});
        }
        for (const LCollision& x : c.l) {
            l.push_back({{"first", recs[x.i].path.word()},
                         {"second", recs[x.j].path.word()},
                         {"L", recs[x.i].l.value.str()},
                         {"bands_isomorphic", x.bands_isomorphic}});
        }
        r["collisions"] = {{"equal_M", m}, {"equal_L", l}};
    }
    if (monotonicity) {
        const MonotonicityReport mono = monotonicity_scan(recs);
        auto pairs = [&](const auto& v) {
            Json out = Json::array();
            for (auto [x, y] : v) out.push_back({{"first", recs[x].path.word()}, {"second", recs[y].path.word()}});
            return out;
        };
        r["monotonicity"] = {{"pairs_checked", mono.pairs_checked},
                             {"violations_4a", pairs(mono.violations_a)},
                             {"violations_4b", pairs(mono.violations_b)}};
    }
    if (covers) {
        const CoverReport cov = cover_scan(recs);
        Json swaps = Json::array();
        for (const SwapPair& s : cov.swaps) {
            swaps.push_back({{"ru", recs[s.ru].path.word()},
                             {"ur", recs[s.ur].path.word()},
                             {"position", s.position},
                             {"M_order", order_name(s.m_order)},
                             {"L_order", order_name(s.l_order)},
                             {"M_cover", s.m_cover},
                             {"L_cover", s.l_cover}});
        }
        r["covers"] = {{"swaps", swaps},
                       {"M_cover_pairs", cov.m_covers.size()},
                       {"L_cover_pairs", cov.l_covers.size()}};
    }
    Json rows = Json::array();
    for (const PathRecord& rec : recs) rows.push_back(record_json(rec, config.digits));
    r["rows"] = std::move(rows);
    return r;
}

Json orders_sup(const Config& config) {
    const std::vector<PathRecord> recs = compute_all_records(config.max_total, config.threads);
    if (recs.empty()) throw InvalidInput("--max-total must be at least 3");
    const SupReport s = sup_scan(recs, config.max_total);
    Json r = header("orders sup");
    r["max_total"] = s.max_total;
    r["paths"] = s.paths;
    r["max_L"] = quad_json(recs[s.argmax].l.value, config.digits);
    r["argmax"] = recs[s.argmax].path.word();
    r["min_L"] = quad_json(recs[s.argmin].l.value, config.digits);
    r["argmin"] = recs[s.argmin].path.word();
    r["bound"] = quad_json(s.bound, config.digits);
    r["max_minus_bound_sign"] = s.gap_sign;
    r["below_bound"] = s.gap_sign < 0;
    r["all_at_least_sqrt5"] = s.all_at_least_sqrt5;
    return r;
}

Json orders_limit_demo(unsigned k, const Config& config) {
    const LimitReport rep = limit_demo(k);
    const QuadraticIrrational three = QuadraticIrrational::from_integer(3);
    auto dec = [&](const Rational& x) { return to_decimal(QuadraticIrrational(x), config.digits); };
    Json r = header("orders limit-demo");
    r["k"] = rep.k;
    r["word"] = rep.word;
    r["coeff_count"] = rep.coeffs.size();
    r["samples"] = rep.samples.size();
    r["global_sup"] = dec(rep.global_sup);
    r["tail_sup"] = dec(rep.tail_sup);
    r["tail_sup_minus_3"] = dec(rep.tail_sup - Rational(3));
    r["within_0.01"] = abs(rep.tail_sup.num() - 3 * rep.tail_sup.den()) * 100 < rep.tail_sup.den();
    r["limit"] = {{"left", rep.limit_left.str()},
                  {"right", rep.limit_right.str()},
                  {"sum", rep.limit_sum.str()},
                  {"alt_left", rep.alt_left.str()},
                  {"alt_right", rep.alt_right.str()},
                  {"alt_sum", rep.alt_sum.str()},
                  {"both_equal_3", rep.limit_sum == three && rep.alt_sum == three}};
    Json rows = Json::array();
    for (const LimitSample& s : rep.samples) rows.push_back({{"position", s.position}, {"value", dec(s.value)}});
    r["rows"] = std::move(rows);
    return r;
}

Json orders_spectrum(const Config& config) {
    const std::vector<PathRecord> recs = compute_all_records(config.max_total, config.threads);
    const std::vector<std::size_t> rank = l_ranks(recs);
    Json r = header("orders spectrum");
    r["max_total"] = config.max_total;
    r["paths"] = recs.size();
    Json shared = Json::array();
    for (std::size_t i = 0; i < recs.size(); ++i) {
        for (std::size_t j = i + 1; j < recs.size(); ++j) {
            if (rank[i] != rank[j]) continue;
            const LatticePath &x = recs[i].path, &y = recs[j].path;
            if (x.a() == y.a() && x.b() == y.b()) continue;
            shared.push_back({{"first", x.word()}, {"second", y.word()}, {"L", recs[i].l.value.str()}});
        }
    }
    r["distinct_L"] = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
    r["shared_across_endpoints"] = shared;
    r["disjoint"] = shared.empty();
    return r;
}

Json orders_compare(const std::string& w1, const std::string& w2) {
    const LatticePath x = parse_path(w1), y = parse_path(w2);
    Json r = header("orders compare");
    r["first"] = x.word();
    r["second"] = y.word();
    r["M"] = order_name(compare_m(x, y));
    r["L"] = order_name(compare_l(x, y));
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Snake graphs, band graphs, lattice paths and Markov numbers", "latsnake"};
    app.require_subcommand(1);
    app.fallthrough();

    Config config;
    std::string format = "text";
    app.add_option("--format", format, "Output format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", config.threads, "Worker threads for scans (0 = all cores)");
    app.add_option("--max-total", config.max_total, "Cap on a+b for enumerations")->check(CLI::Range(1u, 60u));
    app.add_option("--digits", config.digits, "Decimal places in reports")->check(CLI::Range(0u, 1000u));
    app.add_option("--edge-cap", config.edge_cap, "Largest graph handed to brute-force matching")->check(CLI::PositiveNumber);

    Json report;
    std::string text, extra;
    std::uint32_t a = 0, b = 0;
    unsigned k = 12;
    bool collisions = false, covers = false, monotonicity = false;

    auto* cf = app.add_subcommand("cf", "Finite and periodic continued fractions");
    cf->require_subcommand(1);
    cf->add_subcommand("eval", "Exact value and convergents")->add_option("coeffs", text)->required();
    cf->add_subcommand("normalize", "Fold a trailing 1")->add_option("coeffs", text)->required();
    cf->add_subcommand("matrix", "Convergent matrix [[p,r],[q,s]]")->add_option("coeffs", text)->required();
    auto* periodic = cf->add_subcommand("periodic", "Value of [prefix, period, period, ...]");
    periodic->add_option("period", text, "Period such as ~4,4")->required();
    periodic->add_option("--prefix", extra, "Preperiod coefficients");

    auto* snake = app.add_subcommand("snake", "Snake graphs G[a1..an]");
    snake->require_subcommand(1);
    snake->add_subcommand("build", "Geometry and matching count")->add_option("coeffs", text)->required();
    snake->add_subcommand("count", "Matching count")->add_option("coeffs", text)->required();
    snake->add_subcommand("bands", "Both band graphs of a snake")->add_option("coeffs", text)->required();

    auto* band = app.add_subcommand("band", "Band graphs");
    band->require_subcommand(1);
    band->add_subcommand("count", "Matching count p+s")->add_option("cyclic", text)->required();

    auto* path = app.add_subcommand("path", "Lattice paths in D(a,b)");
    path->require_subcommand(1);
    path->add_subcommand("stats", "M, L and related data")->add_option("word", text)->required();
    path->add_subcommand("lattice-points", "Points between path and diagonal")->add_option("word", text)->required();
    auto* enumerate = path->add_subcommand("enumerate", "All paths of D(a,b)");
    enumerate->add_option("--a", a)->required();
    enumerate->add_option("--b", b)->required();

    auto* chris = app.add_subcommand("christoffel", "Christoffel path of D(a,b)");
    chris->add_option("--a", a)->required();
    chris->add_option("--b", b)->required();

    auto* markov = app.add_subcommand("markov", "Markov numbers");
    markov->require_subcommand(1);
    markov->add_subcommand("number", "m_{b/a}")->add_option("fraction", text, "b/a")->required();
    markov->add_subcommand("scan", "Uniqueness scan")->add_option("--max", text, "Bound on the largest entry")->required();
    markov->add_subcommand("lagrange", "sqrt(9m^2-4)/m")->add_option("m", text)->required();

    auto* orders = app.add_subcommand("orders", "Orders <_M and <_L and experiments");
    orders->require_subcommand(1);
    auto* scan = orders->add_subcommand("scan", "Per-path table and extremes for D(a,b)");
    scan->add_option("--a", a)->required();
    scan->add_option("--b", b)->required();
    scan->add_flag("--collisions", collisions);
    scan->add_flag("--covers", covers);
    scan->add_flag("--monotonicity", monotonicity);
    orders->add_subcommand("sup", "Largest L over all a+b <= --max-total");
    orders->add_subcommand("limit-demo", "Two-sided sums for R^2U R^3U ... R^{k+1}U")
        ->add_option("--k", k)
        ->check(CLI::Range(1u, kMaxLimitDemoK));
    orders->add_subcommand("spectrum", "L values shared between different D(a,b)");
    auto* cmp = orders->add_subcommand("compare", "Compare two paths under both orders");
    cmp->add_option("first", text)->required();
    cmp->add_option("second", extra)->required();

    app.add_subcommand("verify", "Check the reference values");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return kOk;
        err << app.help();
        return kInvalidInput;
    }

    try {
        config.format = parse_format(format);
        auto chosen = [](CLI::App* parent, const char* name) { return parent->got_subcommand(name); };
        if (app.got_subcommand(cf)) {
            if (chosen(cf, "eval")) report = cf_eval(text);
            if (chosen(cf, "normalize")) report = cf_normalize(text);
            if (chosen(cf, "matrix")) report = cf_matrix(text);
            if (chosen(cf, "periodic")) report = cf_periodic(text, extra, config);
        } else if (app.got_subcommand(snake)) {
            if (chosen(snake, "build") || chosen(snake, "count")) report = snake_build(text, config);
            if (chosen(snake, "count")) report["command"] = "snake count";
            if (chosen(snake, "bands")) report = snake_bands(text, config);
        } else if (app.got_subcommand(band)) {
            report = band_count(text, config);
        } else if (app.got_subcommand(path)) {
            if (chosen(path, "stats")) report = path_stats(text, config);
            if (chosen(path, "lattice-points")) {
                const LatticePath p = parse_path(text);
                report = header("path lattice-points");
                report["word"] = p.word();
                report["lattice_points_between"] = lattice_points_between(p);
            }
            if (chosen(path, "enumerate")) report = path_enumerate(a, b, config);
        } else if (app.got_subcommand(chris)) {
            report = christoffel_cmd(a, b, config);
        } else if (app.got_subcommand(markov)) {
            if (chosen(markov, "number")) report = markov_number_cmd(text, config);
            if (chosen(markov, "scan")) report = markov_scan(text);
            if (chosen(markov, "lagrange")) report = markov_lagrange(text, config);
        } else if (app.got_subcommand(orders)) {
            if (chosen(orders, "scan")) report = orders_scan(a, b, collisions, covers, monotonicity, config);
            if (chosen(orders, "sup")) report = orders_sup(config);
            if (chosen(orders, "limit-demo")) report = orders_limit_demo(k, config);
            if (chosen(orders, "spectrum")) report = orders_spectrum(config);
            if (chosen(orders, "compare")) report = orders_compare(text, extra);
        } else if (app.got_subcommand("verify")) {
            report = verify_report(config);
        }
        write_report(out, report, config.format);
        return kOk;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kInvariantViolation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInvariantViolation;
    }
}

}  // namespace latsnake::cli

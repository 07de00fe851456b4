#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/fusion.hpp"
#include "fusionkit/yangian.hpp"

using namespace fusionkit;
using nlohmann::ordered_json;

namespace {

// "lambda/mu@z"; the last '@' splits off the evaluation point, so parts never
// need escaping
std::pair<SkewShape, Rational> parse_module_spec(const std::string& s) {
    const auto at = s.rfind('@');
    if (at == std::string::npos)
        throw std::invalid_argument("module spec '" + s + "' is missing '@point'");
    return {SkewShape::parse(s.substr(0, at)), Rational::parse(s.substr(at + 1))};
}

std::string cycle_str(const Permutation& g) {
    if (g.is_identity()) return "id";
    std::string out;
    std::vector<bool> seen(g.degree(), false);
    for (int i = 1; i <= g.degree(); ++i) {
        if (seen[i - 1] || g.apply(i) == i) continue;
        out += '(';
        for (int j = i; !seen[j - 1]; j = g.apply(j)) {
            seen[j - 1] = true;
            if (j != i) out += ' ';
            out += std::to_string(j);
        }
        out += ')';
    }
    return out;
}

std::string ring_str(const GroupRingQ& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : x.terms()) {
        Rational a = c;
        if (out.empty()) {
            if (a.sign() < 0) { out += '-'; a = -a; }
        } else if (a.sign() < 0) {
            out += " - ";
            a = -a;
        } else {
            out += " + ";
        }
        out += a.str() + "·" + cycle_str(g);
    }
    return out;
}

ordered_json ring_json(const GroupRingQ& x) {
    ordered_json arr = ordered_json::array();
    for (const auto& [g, c] : x.terms()) {
        ordered_json term;
        term["perm"] = g.images();
        term["coeff"] = c.str();
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered_json matrix_json(const MatrixQ& m) {
    ordered_json arr = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) arr.push_back(m.at(r, c).str());
    return arr;
}

ordered_json matrix_json(const MatrixRF& m) {
    ordered_json arr = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) arr.push_back(m.at(r, c).str());
    return arr;
}

ordered_json guards_json(const Guards& g) {
    return ordered_json{{"fusion_max_boxes", g.fusion_max_boxes},
                        {"pair_max_boxes", g.pair_max_boxes},
                        {"ambient_max", g.ambient_max},
                        {"burnside_max_dim", g.burnside_max_dim}};
}

std::string kv_text(const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    std::string out;
    for (const auto& [k, v] : rows) {
        out += k;
        out.append(w - k.size() + 2, ' ');
        out += v;
        out += '\n';
    }
    return out;
}

template <class M>
std::string grid_text(const M& m) {
    std::vector<size_t> w(m.cols(), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) w[c] = std::max(w[c], m.at(r, c).str().size());
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        out += '[';
        for (int c = 0; c < m.cols(); ++c) {
            const std::string cell = m.at(r, c).str();
            out.append(w[c] - cell.size() + (c ? 2 : 1), ' ');
            out += cell;
        }
        out += " ]\n";
    }
    return out;
}

using Checks = std::vector<std::pair<std::string, bool>>;

void durfee_checks(int max_boxes, Checks& out) {
    bool formula = true, conj = true, rot = true, positive = true;
    for (const auto& shape : enumerate_skew_shapes(max_boxes, max_boxes, max_boxes)) {
        const int d = durfee_rank_definition(shape).rank;
        formula = formula && d == durfee_rank_formula(shape);
        conj = conj && durfee_rank_definition(conjugate(shape)).rank == d;
        rot = rot && durfee_rank_definition(rotate180(shape)).rank == d;
        positive = positive && d >= 1;
    }
    out.emplace_back("rank definition equals the row formula", formula);
    out.emplace_back("rank is invariant under conjugation", conj);
    out.emplace_back("rank is invariant under rotation", rot);
    out.emplace_back("rank is at least one", positive);
}

void fusion_checks(int max_boxes, const Guards& guards, Checks& out) {
    const int cap = std::min(max_boxes, guards.fusion_max_boxes);
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17};
    bool id_coeff = true, alpha = true, direction = true;
    for (const auto& shape : enumerate_skew_shapes(cap, cap, cap)) {
        const GroupRingQ f = fusion_element(shape, guards);
        id_coeff = id_coeff &&
                   f.coefficient(Permutation::identity(shape.box_count())) == Rational(1);
        alpha = alpha && alpha_involution(f) == f;
        std::vector<long> a(shape.column_lengths().size());
        for (size_t k = 0; k < a.size(); ++k) a[k] = primes[k];
        direction =
            direction && fusion_element(FusionContext::with_direction(shape, a), guards) == f;
    }
    out.emplace_back("identity coefficient is one", id_coeff);
    out.emplace_back("fixed by the reversal involution", alpha);
    out.emplace_back("limit independent of the direction", direction);
}

void h_checks(int max_boxes, Checks& out) {
    bool order = true, conj_leading = true, partition = true;
    const RationalFunction one_minus_u = RationalFunction::linear(Rational(1), Rational(-1));
    for (const auto& shape : enumerate_skew_shapes(max_boxes, max_boxes, max_boxes)) {
        const int n = shape.box_count();
        try {
            const HPoleData hd = c_and_order(shape);
            const HPoleData hc = c_and_order(conjugate(shape));
            const Rational sign((hd.order + n) % 2 == 0 ? 1 : -1);
            conj_leading = conj_leading && hc.order == hd.order && hc.c == sign * hd.c;
        } catch (const InternalError&) {
            order = false;
        }
        RationalFunction pw{Rational(1)};
        for (int i = 0; i < n; ++i) pw *= one_minus_u;
        partition =
            partition && h_partition_product(shape) == h_function(conjugate(shape)) * pw;
    }
    out.emplace_back("pole order at the origin equals the rank", order);
    out.emplace_back("conjugate leading coefficient carries the sign rule", conj_leading);
    out.emplace_back("row pair product equals conjugate h times (1-u)^n", partition);
}

void pair_checks(int max_boxes, const Guards& guards, Checks& out) {
    const int total = std::min(max_boxes + 1, guards.pair_max_boxes);
    const auto shapes = enumerate_skew_shapes(total - 1, total - 1, total - 1);
    bool orderings = true;
    for (const auto& w : shapes)
        for (const auto& w2 : shapes) {
            if (w.box_count() + w2.box_count() > total) continue;
            const GroupRingRF f = pair_function_F(w, w2, PairOrdering::product_first, guards);
            orderings = orderings &&
                        f == pair_function_F(w, w2, PairOrdering::product_between, guards) &&
                        f == pair_function_F(w, w2, PairOrdering::product_last, guards);
        }
    out.emplace_back("three pair product orderings agree", orderings);

    bool bound = true, leading = true;
    for (const auto& shape : enumerate_skew_shapes(std::min(max_boxes, 3), 3, 3)) {
        const auto lead = pair_leading_at_zero(shape, guards);
        bound = bound && !lead.is_zero &&
                lead.order >= -durfee_rank_definition(shape).rank;
        leading = leading && verify_pair_leading_term(shape, guards);
    }
    out.emplace_back("diagonal pole order bounded by the rank", bound);
    out.emplace_back("diagonal leading term matches the closed form", leading);
}

void dims_checks(int max_boxes, const Guards& guards, Checks& out) {
    bool dims = true;
    for (const auto& shape : enumerate_skew_shapes(max_boxes, max_boxes, max_boxes))
        for (int N = 1; N <= 3; ++N)
            dims = dims && module_space(shape, N, guards).dim() == ssyt_count(shape, N);
    out.emplace_back("module dimension equals the tableau count", dims);
}

void identity_checks(int N, int samples, unsigned seed, const Guards& guards, Checks& out) {
    const bool ok = verify_identities(SkewShape::parse("1"), SkewShape::parse("2"),
                                      SkewShape::parse("1,1"), N, samples, guards, seed);
    out.emplace_back("exact identity suite on the smallest triple", ok);
}

void criterion_checks(const Guards& guards, Checks& out) {
    const std::vector<SkewShape> shapes{SkewShape::parse("1"), SkewShape::parse("2"),
                                        SkewShape::parse("1,1")};
    const std::vector<Rational> diffs{Rational(0), Rational(1), Rational(2), Rational(1, 2)};
    bool agree = true;
    for (const auto& w1 : shapes)
        for (const auto& w2 : shapes)
            for (const auto& dz : diffs) {
                const std::vector<std::pair<SkewShape, Rational>> parts{{w1, Rational(0)},
                                                                        {w2, dz}};
                agree = agree && irreducibility_criterion(parts, 2, guards).irreducible ==
                                     burnside_irreducible(parts, 2, 0, guards);
            }
    out.emplace_back("pairwise verdict matches the closure oracle", agree);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for skew diagram fusion elements and Yangian modules"};
    app.require_subcommand(1);

    std::string format = "text";
    bool timing = false;
    std::string shape_arg, z_arg = "0", suite = "all";
    std::vector<std::string> shape_args, module_args;
    int N = 2, max_boxes = 4, max_rows = 0, max_cols = 0, samples = 2;
    unsigned seed = 1797;
    bool with_oracle = false;

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timing", timing, "include elapsed milliseconds in the report");
    };

    auto* durfee = app.add_subcommand("durfee", "Durfee rank report of a skew shape");
    durfee->add_option("--shape", shape_arg, "shape as lambda/mu, e.g. 3,2/1")->required();
    add_output(durfee);

    auto* contents = app.add_subcommand("contents", "box contents in column reading order");
    contents->add_option("--shape", shape_arg)->required();
    add_output(contents);

    auto* fusion = app.add_subcommand("fusion", "fusion element of the group ring");
    fusion->add_option("--shape", shape_arg)->required();
    add_output(fusion);

    auto* dim = app.add_subcommand("dim", "dimension of the module carried by a shape");
    dim->add_option("--shape", shape_arg)->required();
    dim->add_option("-N,--rank", N, "size of the underlying vector space C^N");
    add_output(dim);

    auto* rmatrix = app.add_subcommand("rmatrix", "restricted pair product as a matrix in u");
    rmatrix->add_option("--shape", shape_args, "two shapes, flag given twice")
        ->expected(2)
        ->required();
    rmatrix->add_option("-N,--rank", N);
    add_output(rmatrix);

    auto* intertwiner =
        app.add_subcommand("intertwiner", "leading coefficient of the pair product at a point");
    intertwiner->add_option("--shape", shape_args, "two shapes, flag given twice")
        ->expected(2)
        ->required();
    intertwiner->add_option("-N,--rank", N);
    intertwiner->add_option("--z", z_arg, "expansion point, a rational like 3/2");
    add_output(intertwiner);

    auto* irreducible =
        app.add_subcommand("irreducible", "pairwise irreducibility test of a tensor product");
    irreducible->add_option("--module", module_args, "factor as shape@point, repeatable")
        ->required();
    irreducible->add_option("-N,--rank", N);
    irreducible->add_flag("--oracle", with_oracle,
                          "also run the matrix algebra closure cross-check");
    add_output(irreducible);

    auto* verify = app.add_subcommand("verify", "run a named verification sweep");
    verify->add_option("--suite", suite, "durfee, fusion, h, pair, dims, identities, criterion or all")
        ->check(CLI::IsMember(
            {"durfee", "fusion", "h", "pair", "dims", "identities", "criterion", "all"}));
    verify->add_option("--max-boxes", max_boxes, "size cap for the shape sweeps");
    verify->add_option("-N,--rank", N);
    verify->add_option("--samples", samples, "sample points for the identity suite");
    verify->add_option("--seed", seed, "seed for the sample point generator");
    add_output(verify);

    auto* enumerate = app.add_subcommand("enumerate", "list skew shapes up to translation");
    enumerate->add_option("--max-boxes", max_boxes)->required();
    enumerate->add_option("--max-rows", max_rows, "bounding box height, defaults to max-boxes");
    enumerate->add_option("--max-cols", max_cols, "bounding box width, defaults to max-boxes");
    add_output(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    int exit_code = 0;
    try {
        const Guards guards = Guards::from_env();
        ordered_json inputs, result;
        std::string text;
        const auto started = std::chrono::steady_clock::now();

        if (app.got_subcommand(durfee)) {
            const SkewShape shape = SkewShape::parse(shape_arg);
            const DurfeeReport rep = durfee_rank_definition(shape);
            inputs["shape"] = shape.str();
            result = {{"rank", rep.rank},
                      {"convex", rep.d_plus},
                      {"concave", rep.d_minus},
                      {"ell", nonempty_rows(shape)}};
            text = kv_text({{"rank", std::to_string(rep.rank)},
                            {"convex", std::to_string(rep.d_plus)},
                            {"concave", std::to_string(rep.d_minus)},
                            {"ell", std::to_string(nonempty_rows(shape))}});
        } else if (app.got_subcommand(contents)) {
            const SkewShape shape = SkewShape::parse(shape_arg);
            inputs["shape"] = shape.str();
            result["contents"] = contents_column_order(shape);
            ordered_json boxes = ordered_json::array();
            std::string line;
            for (const Box& b : shape.boxes_column_order())
                boxes.push_back(ordered_json::array({b.row, b.col}));
            result["boxes"] = std::move(boxes);
            for (int c : contents_column_order(shape)) {
                if (!line.empty()) line += ' ';
                line += std::to_string(c);
            }
            text = line + '\n';
        } else if (app.got_subcommand(fusion)) {
            const SkewShape shape = SkewShape::parse(shape_arg);
            const GroupRingQ f = fusion_element(shape, guards);
            inputs["shape"] = shape.str();
            result["element"] = ring_json(f);
            result["support"] = f.support_size();
            text = ring_str(f) + '\n';
        } else if (app.got_subcommand(dim)) {
            const SkewShape shape = SkewShape::parse(shape_arg);
            const ModuleSpace space = module_space(shape, N, guards);
            inputs = {{"shape", shape.str()}, {"N", N}};
            result = {{"dim", space.dim()},
                      {"tableaux", ssyt_count(shape, N)},
                      {"ambient", space.ambient_dim()}};
            text = kv_text({{"dim", std::to_string(space.dim())},
                            {"tableaux", std::to_string(ssyt_count(shape, N))},
                            {"ambient", std::to_string(space.ambient_dim())}});
        } else if (app.got_subcommand(rmatrix)) {
            const SkewShape w = SkewShape::parse(shape_args[0]);
            const SkewShape w2 = SkewShape::parse(shape_args[1]);
            const MatrixRF R = r_matrix(w, w2, N, guards);
            const int d1 = module_space(w, N, guards).dim();
            const int d2 = module_space(w2, N, guards).dim();
            inputs = {{"shapes", {w.str(), w2.str()}}, {"N", N}};
            result = {{"dims", {d1, d2}}, {"entries", matrix_json(R)}};
            text = grid_text(R);
        } else if (app.got_subcommand(intertwiner)) {
            const SkewShape w = SkewShape::parse(shape_args[0]);
            const SkewShape w2 = SkewShape::parse(shape_args[1]);
            const Rational z = Rational::parse(z_arg);
            const IntertwinerData data = intertwiner_leading(w, w2, N, z, guards);
            const int d1 = module_space(w, N, guards).dim();
            const int d2 = module_space(w2, N, guards).dim();
            inputs = {{"shapes", {w.str(), w2.str()}}, {"N", N}, {"z", z.str()}};
            result = {{"a", data.a},
                      {"invertible", data.invertible},
                      {"dims", {d1, d2}},
                      {"leading", matrix_json(data.I)}};
            text = kv_text({{"a", std::to_string(data.a)},
                            {"invertible", data.invertible ? "yes" : "no"}}) +
                   grid_text(data.I);
        } else if (app.got_subcommand(irreducible)) {
            std::vector<std::pair<SkewShape, Rational>> parts;
            ordered_json mods = ordered_json::array();
            for (const auto& arg : module_args) {
                parts.push_back(parse_module_spec(arg));
                mods.push_back({{"shape", parts.back().first.str()},
                                {"z", parts.back().second.str()}});
            }
            const IrreducibilityReport rep = irreducibility_criterion(parts, N, guards);
            inputs = {{"modules", std::move(mods)}, {"N", N}};
            result["irreducible"] = rep.irreducible;
            ordered_json prs = ordered_json::array();
            for (const auto& p : rep.pairs)
                prs.push_back({{"first", p.first},
                               {"second", p.second},
                               {"z_difference", p.z_difference.str()},
                               {"a", p.data.a},
                               {"invertible", p.data.invertible}});
            result["pairs"] = std::move(prs);
            ordered_json failing = ordered_json::array();
            for (const auto& [i, j] : rep.failing_pairs())
                failing.push_back(ordered_json::array({i, j}));
            result["failing"] = std::move(failing);
            text = kv_text({{"irreducible", rep.irreducible ? "yes" : "no"}});
            for (const auto& p : rep.pairs)
                text += "pair " + std::to_string(p.first) + "," + std::to_string(p.second) +
                        "  dz " + p.z_difference.str() + "  a " + std::to_string(p.data.a) +
                        "  invertible " + (p.data.invertible ? "yes" : "no") + "\n";
            if (with_oracle) {
                const bool oracle = burnside_irreducible(parts, N, 0, guards);
                result["oracle"] = oracle;
                text += kv_text({{"oracle", oracle ? "yes" : "no"}});
            }
        } else if (app.got_subcommand(verify)) {
            Checks checks;
            if (suite == "durfee" || suite == "all") durfee_checks(max_boxes, checks);
            if (suite == "fusion" || suite == "all") fusion_checks(max_boxes, guards, checks);
            if (suite == "h" || suite == "all") h_checks(max_boxes, checks);
            if (suite == "pair" || suite == "all") pair_checks(max_boxes, guards, checks);
            if (suite == "dims" || suite == "all") dims_checks(max_boxes, guards, checks);
            if (suite == "identities" || suite == "all")
                identity_checks(N, samples, seed, guards, checks);
            if (suite == "criterion" || suite == "all") criterion_checks(guards, checks);
            bool pass = true;
            ordered_json arr = ordered_json::array();
            for (const auto& [name, ok] : checks) {
                pass = pass && ok;
                arr.push_back({{"name", name}, {"pass", ok}});
                text += (ok ? "PASS  " : "FAIL  ") + name + '\n';
            }
            inputs = {{"suite", suite},
                      {"max_boxes", max_boxes},
                      {"N", N},
                      {"samples", samples},
                      {"seed", seed}};
            result = {{"pass", pass}, {"checks", std::move(arr)}};
            text += kv_text({{"checks", std::to_string(checks.size())},
                             {"overall", pass ? "PASS" : "FAIL"}});
            if (!pass) exit_code = 1;
        } else if (app.got_subcommand(enumerate)) {
            const int rows = max_rows > 0 ? max_rows : max_boxes;
            const int cols = max_cols > 0 ? max_cols : max_boxes;
            const auto shapes = enumerate_skew_shapes(max_boxes, rows, cols);
            inputs = {{"max_boxes", max_boxes}, {"max_rows", rows}, {"max_cols", cols}};
            ordered_json arr = ordered_json::array();
            for (const auto& s : shapes) {
                arr.push_back(s.str());
                text += s.str() + '\n';
            }
            result = {{"count", shapes.size()}, {"shapes", std::move(arr)}};
        }

        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        if (format == "json") {
            ordered_json report;
            report["command"] = app.get_subcommands().front()->get_name();
            report["inputs"] = std::move(inputs);
            report["result"] = std::move(result);
            report["guards"] = guards_json(guards);
            if (timing) report["elapsed_ms"] = elapsed;
            std::cout << report.dump(2) << '\n';
        } else {
            std::cout << text;
            if (timing) std::cout << kv_text({{"elapsed_ms", std::to_string(elapsed)}});
        }
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

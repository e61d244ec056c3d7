#include "kring/cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kring/intertwine.hpp"
#include "kring/ktheory.hpp"

namespace kring {

namespace {

using Json = nlohmann::ordered_json;

Json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

std::string cell_str(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_table(const Json& j, std::ostream& out, int indent) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_table(value, out, indent + 2);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << pad << key << ":\n";
            std::vector<std::string> cols;
            for (const auto& [k, _] : value.front().items()) cols.push_back(k);
            std::vector<std::size_t> width;
            for (const auto& c : cols) width.push_back(c.size());
            for (const auto& row : value)
                for (std::size_t i = 0; i < cols.size(); ++i)
                    if (row.contains(cols[i]))
                        width[i] = std::max(width[i], cell_str(row[cols[i]]).size());
            auto line = [&](const std::vector<std::string>& cells) {
                out << pad << ' ';
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    out << ' ' << cells[i];
                    if (i + 1 < cells.size())
                        out << std::string(width[i] - cells[i].size(), ' ');
                }
                out << '\n';
            };
            line(cols);
            for (const auto& row : value) {
                std::vector<std::string> cells;
                for (const auto& c : cols)
                    cells.push_back(row.contains(c) ? cell_str(row[c]) : "");
                line(cells);
            }
        } else if (value.is_array()) {
            out << pad << key << ":";
            if (value.empty()) out << " []";
            for (const auto& v : value) out << ' ' << cell_str(v);
            out << '\n';
        } else {
            const std::string s = cell_str(value);
            if (s.find('\n') != std::string::npos) {
                out << pad << key << ":\n";
                std::istringstream is(s);
                std::string ln;
                while (std::getline(is, ln)) out << pad << "  " << ln << '\n';
            } else {
                out << pad << key << ": " << s << '\n';
            }
        }
    }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << j.dump(2) << '\n';
    else
        render_table(j, out, 0);
}

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (int c : w.coords) a.push_back(c);
    return a;
}

Json system_json(const RootSystem& rs, const std::string& ring_name) {
    return Json{{"name", rs.name()},
                {"rank", rs.rank},
                {"positive_roots", rs.positive_roots.size()},
                {"weyl_order", json_int(rs.weyl_order())},
                {"ring", ring_name}};
}

// Decomposition terms ordered top weight first.
std::vector<std::pair<Weight, Int>> sorted_terms(const Character& c) {
    const auto dec = decompose_character(c);
    std::vector<std::pair<Weight, Int>> terms(dec.begin(), dec.end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        const Int ha = c.rs->height_key(a.first), hb = c.rs->height_key(b.first);
        return ha != hb ? ha > hb : a.first > b.first;
    });
    return terms;
}

Json decomposition_json(const Character& c) {
    Json arr = Json::array();
    for (const auto& [w, m] : sorted_terms(c))
        arr.push_back(Json{{"weight", weight_json(w)},
                           {"mult", json_int(m)},
                           {"dim", json_int(weyl_dimension(*c.rs, w))}});
    return arr;
}

std::string decomposition_str(const Character& c) {
    std::string s;
    for (const auto& [w, m] : sorted_terms(c)) {
        if (!s.empty()) s += " + ";
        if (m != 1) s += m.str() + "*";
        const bool triv = std::all_of(w.coords.begin(), w.coords.end(),
                                      [](int x) { return x == 0; });
        if (triv) {
            s += "1";
        } else {
            s += "V(";
            for (std::size_t i = 0; i < w.coords.size(); ++i)
                s += (i ? "," : "") + std::to_string(w.coords[i]);
            s += ")";
        }
    }
    return s.empty() ? "0" : s;
}

int cmd_info(const PairSpec& spec, const std::string& format, std::ostream& out) {
    const auto hom = restriction_hom(spec);
    Json gens = Json::array();
    for (std::size_t g = 0; g < hom->big->gens.size(); ++g)
        gens.push_back(Json{{"name", hom->big->gens[g].name},
                            {"dim", json_int(hom->big->gens[g].dim)},
                            {"image", hom->images[g].str()}});
    Json kgens = Json::array();
    for (const auto& g : kernel_generators(*hom)) kgens.push_back(g.str());
    Json small_gens = Json::array();
    for (const auto& g : hom->small->gens)
        small_gens.push_back(Json{{"name", g.name}, {"dim", json_int(g.dim)}});
    emit(Json{{"pair", spec.name()},
              {"m", hom->pair.m},
              {"big", system_json(*hom->pair.big, hom->big->name)},
              {"small", system_json(*hom->pair.small, hom->small->name)},
              {"generators", gens},
              {"small_generators", small_gens},
              {"kernel_generators", kgens}},
         format, out);
    return 0;
}

int cmd_branch(const PairSpec& spec, const std::string& format, std::ostream& out) {
    const auto hom = restriction_hom(spec);
    Json arr = Json::array();
    for (std::size_t g = 0; g < hom->big->gens.size(); ++g) {
        Json row{{"generator", hom->big->gens[g].name},
                 {"dim", json_int(hom->big->gens[g].dim)},
                 {"image", hom->images[g].str()},
                 {"decomposition", decomposition_str(hom->restricted[g])}};
        if (format == "json") row["terms"] = decomposition_json(hom->restricted[g]);
        arr.push_back(std::move(row));
    }
    emit(Json{{"pair", spec.name()}, {"restrictions", arr}}, format, out);
    return 0;
}

int cmd_kernel_verify(const PairSpec& spec, int degree, std::size_t max_dim,
                      const std::string& format, std::ostream& out) {
    const auto report = verify_kernel_generation(*restriction_hom(spec), degree, max_dim);
    Json rows = Json::array();
    for (const auto& r : report.per_degree)
        rows.push_back(Json{{"e", r.e},
                            {"kernel_rank", r.kernel_rank},
                            {"ideal_rank", r.ideal_rank},
                            {"match", r.match}});
    emit(Json{{"pair", spec.name()},
              {"degree", report.degree},
              {"per_degree", rows},
              {"pass", report.pass}},
         format, out);
    return report.pass ? 0 : 1;
}

int cmd_koszul_verify(const PairSpec& spec, int degree, std::size_t max_dim,
                      const std::string& format, std::ostream& out) {
    const auto kc = build_koszul(spec);
    const auto report = truncated_exactness(kc, degree, max_dim);
    const auto tor = tor_ranks(kc);
    Json slices = Json::array();
    for (const auto& s : report.slices) {
        Json hr = Json::array(), tc = Json::array();
        for (int r : s.h_ranks) hr.push_back(r);
        for (int t : s.torsion_count) tc.push_back(t);
        slices.push_back(Json{{"e", s.e}, {"h_ranks", hr}, {"torsion", tc}, {"pass", s.pass}});
    }
    Json torj = Json::array();
    for (const auto& t : tor) torj.push_back(json_int(t));
    emit(Json{{"pair", spec.name()},
              {"degree", report.degree},
              {"slices", slices},
              {"tor_ranks", torj},
              {"pass", report.pass}},
         format, out);
    return report.pass ? 0 : 1;
}

int cmd_e2(const PairSpec& spec, int qmax, const std::string& format, std::ostream& out) {
    const auto page = e2_page(spec, qmax);
    Json j{{"pair", spec.name()},
           {"m", page.m},
           {"qmax", page.qmax},
           {"degenerate", page.degenerate},
           {"note", page.note}};
    if (format == "json") {
        Json entries = Json::array();
        for (const auto& e : page.entries)
            entries.push_back(
                Json{{"p", e.p}, {"q", e.q}, {"rank", json_int(e.rank)}, {"label", e.label}});
        j["entries"] = entries;
    } else {
        // one row per q, one column per p
        Json grid = Json::array();
        for (int q = 0; q <= page.qmax; ++q) {
            Json row{{"q", q}};
            for (int p = 0; p <= page.m; ++p)
                row["p=" + std::to_string(p)] = json_int(e2_rank(page, p, q));
            grid.push_back(std::move(row));
        }
        j["ranks"] = grid;
    }
    emit(j, format, out);
    return 0;
}

int cmd_ktheory(const PairSpec& spec, bool twisted, const std::string& format,
                std::ostream& out) {
    const GradedKModule mod =
        twisted ? k_theory_twisted(spec, Cocycle::NonSplit) : k_theory_split(spec);
    Json basis = Json::array();
    int k1 = 0;
    for (const auto& el : mod.basis) {
        Json idx = Json::array();
        for (int i : el.indices) idx.push_back(i);
        basis.push_back(Json{{"I", idx},
                             {"shift", el.shift},
                             {"coefficient", el.coeff.str()},
                             {"word", el.word},
                             {"label", el.label}});
        if (el.shift == 1) ++k1;
    }
    const auto cs = poincare_coefficients(mod);
    Json poincare = Json::array();
    std::string poly;
    for (std::size_t p = 0; p < cs.size(); ++p) {
        poincare.push_back(json_int(cs[p]));
        if (cs[p] == 0) continue;
        if (!poly.empty()) poly += " + ";
        if (cs[p] != 1 || p == 0) poly += cs[p].str();
        if (p >= 1) poly += "x";
        if (p >= 2) poly += "^" + std::to_string(p);
    }
    emit(Json{{"pair", spec.name()},
              {"m", mod.m},
              {"twisted", mod.twisted},
              {"basis", basis},
              {"poincare", poincare},
              {"poincare_polynomial", poly.empty() ? "0" : poly},
              {"k1_classes", k1}},
         format, out);
    return 0;
}

Json qmat_json(const QMat& m) {
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& v : r) {
            const Int num = numerator(v), den = denominator(v);
            row.push_back(den == 1 ? num.str() : num.str() + "/" + den.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_intertwiner(int n, int k, std::size_t max_dim, const std::string& format,
                    std::ostream& out) {
    const auto res = solve_intertwiner(n, k, max_dim);
    const bool pass = res.hom_dim == res.hom_dim_chars && res.alpha_in_solution_space &&
                      res.alpha_invertible;
    emit(Json{{"n", res.n},
              {"k", res.k},
              {"hom_dim", res.hom_dim},
              {"hom_dim_characters", json_int(res.hom_dim_chars)},
              {"alpha_in_solution_space", res.alpha_in_solution_space},
              {"alpha_invertible", res.alpha_invertible},
              {"alpha", format_qmat(res.alpha)},
              {"pass", pass}},
         format, out);
    return pass ? 0 : 1;
}

int cmd_loop(int n, int k, const std::string& g_file, std::uint64_t seed, int check,
             std::size_t max_dim, const std::string& format, std::ostream& out) {
    QMat g;
    if (g_file.empty()) {
        g = qmat_identity(2 * n);
        g[0][0] = 2;
        g[2 * n - 1][2 * n - 1] = Rat(1, 2);
    } else {
        std::ifstream in(g_file);
        if (!in) throw InputError("cannot open matrix file '" + g_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        g = parse_qmat(buf.str());
    }
    const QMat chi = loop_matrix(n, k, g, max_dim);
    bool pass = true;
    Json checks;
    if (check > 0) {
        bool sym_id = true, coset = true;
        for (const QMat& h : symplectic_elements(n, check, seed)) {
            if (!qmat_is_identity(loop_matrix(n, k, h, max_dim))) sym_id = false;
            if (loop_matrix(n, k, qmat_mul(g, h), max_dim) != chi) coset = false;
        }
        pass = sym_id && coset;
        checks = Json{{"seed", seed},
                      {"count", check},
                      {"symplectic_identity", sym_id},
                      {"coset_invariance", coset}};
    }
    Json j{{"n", n},
           {"k", k},
           {"g", format_qmat(g)},
           {"chi", format_qmat(chi)},
           {"det", cell_str(qmat_json(QMat{{qmat_det(chi)}})[0][0])},
           {"is_identity", qmat_is_identity(chi)}};
    if (check > 0) j["checks"] = checks;
    j["pass"] = pass;
    emit(j, format, out);
    return pass ? 0 : 1;
}

}  // namespace

std::string format_qmat(const QMat& m) {
    std::string s;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) s += ' ';
            const Int num = numerator(row[j]), den = denominator(row[j]);
            s += num.str();
            if (den != 1) s += "/" + den.str();
        }
        s += '\n';
    }
    return s;
}

QMat parse_qmat(const std::string& text) {
    QMat m;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::vector<Rat> row;
        std::string tok;
        while (toks >> tok) {
            try {
                const auto slash = tok.find('/');
                if (slash == std::string::npos) {
                    row.emplace_back(Int(tok));
                } else {
                    const Int num(tok.substr(0, slash));
                    const Int den(tok.substr(slash + 1));
                    if (den == 0) throw InputError("zero denominator");
                    row.emplace_back(Rat(num, den));
                }
            } catch (const InputError&) {
                throw;
            } catch (const std::exception&) {
                throw InputError("malformed matrix entry '" + tok + "'");
            }
        }
        if (!row.empty()) m.push_back(std::move(row));
    }
    if (m.empty()) throw InputError("malformed matrix input: no rows");
    for (const auto& row : m)
        if (row.size() != m[0].size())
            throw InputError("malformed matrix input: ragged rows");
    return m;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for restriction kernels, Koszul homology and "
                 "twisted K-theory bases of the supported subgroup pairs"};
    app.name("kring");
    app.require_subcommand(1);

    std::string format = "table";
    std::size_t max_dim = 200000;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--max-dim", max_dim, "largest basis/matrix dimension allowed")
        ->envname("KRING_MAX_DIM");

    std::string pair_str;
    int n_flag = 0;
    int degree = -1;
    int qmax = 3;
    bool twisted = false;
    int in = 2, ik = 1;
    std::string g_file;
    std::uint64_t seed = 42;
    int check = 0;

    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("pair", pair_str, "subgroup pair, e.g. sl4/sp4 or e6/f4")->required();
        sub->add_option("--n", n_flag, "n for the generic sl-sp selector");
        sub->fallthrough();
    };

    auto* info = app.add_subcommand("info", "embedding summary");
    add_pair(info);
    auto* branch = app.add_subcommand("branch", "restrictions of the ring generators");
    add_pair(branch);
    auto* kernel = app.add_subcommand("kernel-verify", "kernel lattice vs difference ideal");
    add_pair(kernel);
    kernel->add_option("--degree", degree, "filtered degree bound")->check(CLI::Range(1, 64));
    auto* koszul = app.add_subcommand("koszul-verify", "slicewise Koszul homology");
    add_pair(koszul);
    koszul->add_option("--degree", degree, "slice degree bound")->check(CLI::Range(1, 64));
    auto* e2 = app.add_subcommand("e2", "second-page table");
    add_pair(e2);
    e2->add_option("--qmax", qmax, "largest displayed q")->check(CLI::Range(0, 1024));
    auto* kth = app.add_subcommand("ktheory", "K-theory basis");
    add_pair(kth);
    kth->add_flag("--twisted", twisted, "twist by the nonsplit cocycle");
    auto* inter = app.add_subcommand("intertwiner", "exterior-power intertwiner");
    inter->add_option("--n", in, "half rank of the symplectic group")
        ->required()
        ->check(CLI::Range(2, 64));
    inter->add_option("--k", ik, "exterior power")->required()->check(CLI::Range(1, 64));
    inter->fallthrough();
    auto* loop = app.add_subcommand("loop", "loop matrix of a determinant-1 element");
    loop->add_option("--n", in, "half rank of the symplectic group")
        ->required()
        ->check(CLI::Range(2, 64));
    loop->add_option("--k", ik, "exterior power")->required()->check(CLI::Range(1, 64));
    loop->add_option("--g", g_file, "matrix file (row per line, entries p/q)");
    loop->add_option("--seed", seed, "seed for the check elements");
    loop->add_option("--check", check, "verify coset invariance on this many elements");
    loop->fallthrough();

    try {
        std::vector<const char*> argv{"kring"};
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (info->parsed()) return cmd_info(parse_pair(pair_str, n_flag), format, out);
        if (branch->parsed()) return cmd_branch(parse_pair(pair_str, n_flag), format, out);
        if (kernel->parsed()) {
            const PairSpec spec = parse_pair(pair_str, n_flag);
            const int d = degree > 0 ? degree : (spec.kind == PairSpec::Kind::E6F4 ? 2 : 3);
            return cmd_kernel_verify(spec, d, max_dim, format, out);
        }
        if (koszul->parsed()) {
            const PairSpec spec = parse_pair(pair_str, n_flag);
            const int d = degree > 0 ? degree : (spec.kind == PairSpec::Kind::E6F4 ? 2 : 3);
            return cmd_koszul_verify(spec, d, max_dim, format, out);
        }
        if (e2->parsed()) return cmd_e2(parse_pair(pair_str, n_flag), qmax, format, out);
        if (kth->parsed()) return cmd_ktheory(parse_pair(pair_str, n_flag), twisted, format, out);
        if (inter->parsed()) return cmd_intertwiner(in, ik, max_dim, format, out);
        if (loop->parsed())
            return cmd_loop(in, ik, g_file, seed, check, max_dim, format, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        err << "error: capacity exceeded: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace kring

/*
   Copyright 2026 the liecoh authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "liecoh/cohomology.hpp"
#include "liecoh/factor.hpp"
#include "liecoh/group.hpp"
#include "liecoh/random.hpp"
#include "liecoh/rep_io.hpp"
#include "liecoh/structure.hpp"

using namespace liecoh;

namespace {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass;
};

struct Report {
    std::string command;
    Json extra = Json::object();
    std::vector<Check> checks;
    bool has_seed = false;
    std::uint64_t seed = 0;

    void add(const std::string& name, const std::string& expected,
             const std::string& computed) {
        checks.push_back({name, expected, computed, expected == computed});
    }
    void add_bool(const std::string& name, bool ok) {
        checks.push_back({name, "pass", ok ? "pass" : "fail", ok});
    }
    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
    Json to_json() const {
        Json j;
        j["command"] = command;
        if (has_seed) j["seed"] = seed;
        for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
        Json cs = Json::array();
        for (const Check& c : checks)
            cs.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
        j["checks"] = std::move(cs);
        j["pass"] = pass();
        return j;
    }
};

struct OutputOpts {
    bool json = false;
    std::string out_file;
};

int finish(const Report& report, const OutputOpts& opts, const std::string& human) {
    if (!opts.out_file.empty()) {
        std::ofstream out(opts.out_file);
        out << report.to_json().dump(2) << "\n";
    }
    if (opts.json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << human;
    return report.pass() ? 0 : 1;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

Subalgebra parse_sub(const std::string& s) {
    if (s == "full") return Subalgebra::full;
    if (s == "geom") return Subalgebra::geom;
    if (s == "cycl") return Subalgebra::cycl;
    throw CLI::ValidationError("--sub must be full, geom or cycl");
}

/* alpha spec tokens: integers, ranges a..b, and the named classes
 * half = X - 1/2, sqrt2 = X^2 - 2, i = X^2 + 1, golden = X^2 - X - 1. */
std::vector<Poly> parse_alphas(const std::string& spec) {
    std::vector<Poly> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "half")
            out.push_back(Poly::x_minus(Rat(1, 2)));
        else if (tok == "sqrt2")
            out.push_back(Poly{Rat(-2), Rat(0), Rat(1)});
        else if (tok == "i")
            out.push_back(Poly{Rat(1), Rat(0), Rat(1)});
        else if (tok == "golden")
            out.push_back(Poly{Rat(-1), Rat(-1), Rat(1)});
        else if (auto dots = tok.find(".."); dots != std::string::npos) {
            long long lo = std::stoll(tok.substr(0, dots));
            long long hi = std::stoll(tok.substr(dots + 2));
            for (long long n = lo; n <= hi; ++n) out.push_back(Poly::x_minus(Rat(n)));
        } else {
            out.push_back(Poly::x_minus(Rat(std::stoll(tok))));
        }
    }
    if (out.empty()) throw CLI::ValidationError("empty --alphas specification");
    return out;
}

std::string poly_label(const Poly& p) {
    if (p.degree() == 1 && p.is_monic() && is_integer(-p.coeff(0)))
        return rat_num(-p.coeff(0)).str();
    return p.str();
}

Mat cochain_matrix(const std::vector<Cochain>& cs) {
    if (cs.empty()) return Mat(0, 0);
    Mat m(cochain_to_vec(cs[0]).rows(), cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j) m.set_col(j, cochain_to_vec(cs[j]).col(0));
    return m;
}

/* rank of a family of cocycles in H^q, i.e. modulo the coboundaries */
std::size_t rank_in_cohomology(const LieRep& rep, Subalgebra sub, int q,
                               const std::vector<Cochain>& family) {
    int m = static_cast<int>(subalgebra_basis(sub, rep.d()).size());
    Mat boundaries = q >= 1 ? ce_differential(rep, sub, q - 1)
                            : Mat(rep.dim() * binomial(m, q), 0);
    return added_rank(boundaries, cochain_matrix(family));
}

/* wedge products delta_{i_1} cup ... cup delta_{i_q} over i_1 < ... < i_q */
std::vector<Cochain> delta_wedges(int d, int q) {
    std::vector<Cochain> out;
    for (const std::vector<int>& pick : wedge_basis(d, q)) {
        Cochain c = deltaj_cochain(d, pick[0] + 1);
        for (int k = 1; k < q; ++k) c = cup(c, deltaj_cochain(d, pick[k] + 1));
        out.push_back(std::move(c));
    }
    return out;
}

void cup_checks(Report& report, int d) {
    for (int q = 1; q <= d; ++q) {
        auto fam = delta_wedges(d, q);
        LieRep kq = standard_rep(d, Poly::x_minus(Rat(q)));
        for (const Cochain& c : fam)
            if (!(c.rep == kq) || !is_cocycle(c))
                report.add_bool("wedge family q=" + std::to_string(q) + " cocycles", false);
        std::size_t got = rank_in_cohomology(kq, Subalgebra::full, q, fam);
        report.add("rank of wedge products in H^" + std::to_string(q) +
                       "(g, K[X0]/(X0-" + std::to_string(q) + "))",
                   std::to_string(binomial(d, q)), std::to_string(got));
    }
    for (int q = 1; q <= d + 1; ++q) {
        std::vector<Cochain> fam;
        if (q == 1) {
            fam = {delta0_cochain(d)};
        } else {
            for (Cochain& w : delta_wedges(d, q - 1)) fam.push_back(cup(delta0_cochain(d), w));
        }
        LieRep kq = standard_rep(d, Poly::x_minus(Rat(q - 1)));
        std::size_t got = rank_in_cohomology(kq, Subalgebra::full, q, fam);
        report.add("rank of delta0-products in H^" + std::to_string(q) +
                       "(g, K[X0]/(X0-" + std::to_string(q - 1) + "))",
                   std::to_string(binomial(d, q - 1)), std::to_string(got));
    }
}

void caL_checks(Report& report, int d, const std::vector<Poly>& alphas, int qmax,
                std::string* csv) {
    CaLTable table = verify_caL_table(d, alphas, qmax);
    Json cells = Json::array();
    if (csv) {
        *csv = "alpha";
        for (int q = 0; q <= qmax; ++q) *csv += ",q=" + std::to_string(q);
        *csv += "\n";
    }
    const Poly* current = nullptr;
    for (const CaLCell& cell : table.cells) {
        cells.push_back({{"alpha", poly_label(cell.alpha)},
                         {"q", cell.q},
                         {"computed", cell.computed},
                         {"expected", cell.expected},
                         {"pass", cell.pass}});
        report.add("alpha=" + poly_label(cell.alpha) + " q=" + std::to_string(cell.q),
                   std::to_string(cell.expected), std::to_string(cell.computed));
        if (csv) {
            if (!current || !(*current == cell.alpha)) {
                if (current) *csv += "\n";
                *csv += poly_label(cell.alpha);
                current = &cell.alpha;
            }
            *csv += "," + std::to_string(cell.computed);
        }
    }
    if (csv) *csv += "\n";
    report.extra["d"] = d;
    report.extra["cells"] = std::move(cells);
}

int cmd_dims(const std::string& file, const std::string& sub_name, const OutputOpts& opts) {
    LieRep rep = rep_from_file(file);
    Subalgebra sub = parse_sub(sub_name);
    auto vr = validate(rep);
    auto report_data = cohomology(rep, sub);
    int m = static_cast<int>(subalgebra_basis(sub, rep.d()).size());
    std::vector<std::size_t> cocycles;
    for (int q = 0; q <= m; ++q) {
        Mat dq = q < m ? ce_differential(rep, sub, q)
                       : Mat::zero(0, rep.dim() * binomial(m, q));
        cocycles.push_back(rank_kernel(dq).kernel.cols());
    }
    Report report;
    report.command = "dims";
    report.extra["file"] = file;
    report.extra["sub"] = sub_name;
    report.extra["dims"] = report_data.dims;
    report.extra["cocycles"] = cocycles;
    report.add_bool("representation satisfies the bracket relations", vr.ok);
    std::string human = join_sizes(report_data.dims) + "\n" +
                        "cocycles: " + join_sizes(cocycles) + "\n";
    return finish(report, opts, human);
}

int cmd_classify(const std::string& file, const OutputOpts& opts) {
    LieRep rep = rep_from_file(file);
    Report report;
    report.command = "classify";
    report.extra["file"] = file;
    report.add_bool("representation satisfies the bracket relations", validate(rep).ok);

    LengthVector lv = length(rep);
    Json jl = Json::array();
    std::string human;
    human += "length:";
    for (const auto& [f, m] : lv.factors) {
        jl.push_back({{"poly", poly_to_json(f)}, {"label", f.str()}, {"mult", m}});
        human += " (" + f.str() + ")^" + std::to_string(m);
    }
    human += "\n";
    report.extra["length"] = std::move(jl);

    BlockSplit split = z_split(rep);
    report.extra["z_dim"] = split.z_part.dim();
    report.extra["zprime_dim"] = split.zprime_part.dim();
    report.extra["z_block"] = rep_to_json(split.z_part);
    report.extra["zprime_block"] = rep_to_json(split.zprime_part);
    report.extra["z_inclusion"] = mat_to_json(split.inclusion_z.matrix);
    report.extra["zprime_inclusion"] = mat_to_json(split.inclusion_zprime.matrix);
    human += "z block: dim " + std::to_string(split.z_part.dim()) +
             ", z' block: dim " + std::to_string(split.zprime_part.dim()) + "\n";

    auto irr = irreducible_test(rep);
    report.extra["irreducible"] = irr.irreducible;
    human += std::string("irreducible: ") + (irr.irreducible ? "yes" : "no") + "\n";

    bool unipotent = char_poly(rep.action(0)) == Poly::x_power(static_cast<int>(rep.dim()));
    if (unipotent) {
        auto us = unipotent_structure(rep);
        report.extra["unipotent_blocks"] = us.block_sizes;
        human += "unipotent blocks:";
        for (int r : us.block_sizes) human += " " + std::to_string(r);
        human += "\n";
    } else {
        report.extra["unipotent_blocks"] = nullptr;
    }
    return finish(report, opts, human);
}

int cmd_cup_table(int d, const OutputOpts& opts) {
    Report report;
    report.command = "cup-table";
    report.extra["d"] = d;
    cup_checks(report, d);
    std::string human;
    for (const Check& c : report.checks)
        human += (c.pass ? "pass  " : "FAIL  ") + c.name + " = " + c.computed +
                 " (expected " + c.expected + ")\n";
    return finish(report, opts, human);
}

void euler_suite(Report& report, Rng& rng, int trials, int d_max, int max_dim) {
    for (int t = 0; t < trials; ++t) {
        int d = static_cast<int>(rng.range(1, d_max));
        LieRep rep = random_rep(rng, d, max_dim);
        long long chi = 0;
        auto dims = cohomology(rep, Subalgebra::full).dims;
        for (std::size_t q = 0; q < dims.size(); ++q)
            chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[q]);
        report.add("trial " + std::to_string(t) + " Euler characteristic", "0",
                   std::to_string(chi));
    }
}

void shift_suite(Report& report, Rng& rng, int trials, int d_max) {
    for (int t = 0; t < trials; ++t) {
        int d = static_cast<int>(rng.range(1, d_max));
        LieRep rep = random_rep(rng, d, 5);
        std::size_t n = rep.dim();
        bool ok = true;
        if (n > 0) {
            for (const auto& [f, mult] : factor_rationals(char_poly(rep.action(0))).factors) {
                if (f.degree() != 1) continue;
                Rat lam = -f.coeff(0);
                Mat klam = rank_kernel((rep.action(0) - Mat::identity(n) * lam).pow(n)).kernel;
                Mat knext =
                    rank_kernel((rep.action(0) - Mat::identity(n) * (lam + 1)).pow(n)).kernel;
                for (int j = 1; j <= d && ok; ++j)
                    ok = added_rank(knext, rep.action(j) * klam) == 0;
            }
        }
        report.add_bool("trial " + std::to_string(t) + " eigenvalue shift law", ok);
    }
}

void zsplit_suite(Report& report, Rng& rng, int trials, int intertwiners) {
    for (int t = 0; t < trials; ++t) {
        int d = static_cast<int>(rng.range(1, 3));
        LieRep rep = random_rep(rng, d, 6);
        auto split = z_split(rep);
        bool ok = split.z_part.dim() + split.zprime_part.dim() == rep.dim() &&
                  validate(split.z_part).ok && validate(split.zprime_part).ok &&
                  intertwines(split.inclusion_z) && intertwines(split.inclusion_zprime) &&
                  rank(hstack(split.inclusion_z.matrix, split.inclusion_zprime.matrix)) ==
                      rep.dim();
        report.add_bool("trial " + std::to_string(t) + " z-split stability/additivity", ok);
    }
    int done = 0;
    for (int attempt = 0; attempt < 20 * intertwiners && done < intertwiners; ++attempt) {
        int d = static_cast<int>(rng.range(1, 2));
        LieRep shared = random_rep(rng, d, 3);
        if (shared.dim() == 0) continue;
        LieRep a = direct_sum(shared, random_rep(rng, d, 2));
        LieRep b = direct_sum(random_rep(rng, d, 2), shared);
        auto basis = intertwiner_space(a, b);
        if (basis.empty()) continue;
        Mat f = Mat::zero(b.dim(), a.dim());
        for (const Mat& h : basis) f = f + h * Rat(rng.range(-3, 3));
        auto sa = z_split(a), sb = z_split(b);
        bool ok = added_rank(sb.inclusion_z.matrix, f * sa.inclusion_z.matrix) == 0 &&
                  added_rank(sb.inclusion_zprime.matrix, f * sa.inclusion_zprime.matrix) == 0;
        report.add_bool("intertwiner " + std::to_string(done) + " functoriality", ok);
        ++done;
    }
}

void clas_suite(Report& report, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        int d = static_cast<int>(rng.range(1, 3));
        std::vector<int> sizes;
        LieRep rep = zero_rep(d);
        std::size_t total = 0;
        while (total < 8 && (sizes.empty() || rng.range(0, 1) == 0)) {
            int r = static_cast<int>(rng.range(1, 4));
            if (total + r > 8) break;
            sizes.push_back(r);
            rep = direct_sum(rep, standard_rep(d, Poly::x_power(r)));
            total += r;
        }
        std::sort(sizes.rbegin(), sizes.rend());
        LieRep conj = conjugate(rep, random_invertible(rng, rep.dim()));
        auto us = unipotent_structure(conj);
        bool ok = us.block_sizes == sizes && us.geom_action_zero &&
                  intertwines(us.witness) && inverse(us.witness.matrix).has_value();
        report.add_bool("trial " + std::to_string(t) + " unipotent recovery", ok);
    }
}

void padic_suite(Report& report, Rng& rng, const PadicParams& pp, int d, int prec,
                 int trials) {
    for (int t = 0; t < trials; ++t) {
        AlgebraElement x = random_algebra_element(rng, pp, d, prec);
        AlgebraElement back = mat_log(mat_exp(x));
        bool rt = back.a.congruent(x.a, prec);
        for (int j = 0; j < d; ++j) rt = rt && back.b[j].congruent(x.b[j], prec);
        GroupElement g = random_group_element(rng, pp, d, prec);
        GroupElement gb = mat_exp(mat_log(g));
        rt = rt && gb.u.congruent(g.u, prec);
        for (int j = 0; j < d; ++j) rt = rt && gb.z[j].congruent(g.z[j], prec);
        report.add_bool("trial " + std::to_string(t) + " exp/log round trip", rt);

        GroupElement h = random_group_element(rng, pp, d, prec);
        GroupElement gh = group_mul(g, h);
        bool laws = cocycle_logchi(gh).congruent(cocycle_logchi(g) + cocycle_logchi(h), prec);
        for (int j = 1; j <= d; ++j)
            laws = laws &&
                   cocycle_s(j, gh).congruent(cocycle_s(j, g) + g.u * cocycle_s(j, h), prec);
        report.add_bool("trial " + std::to_string(t) + " cocycle laws", laws);
    }
    report.add_bool("operator relations", relation_check(d).ok);
    std::vector<LieRep> reps{logchi_extension_rep(d), sj_extension_rep(d, 1)};
    for (int n = -1; n <= 2; ++n) reps.push_back(standard_rep(d, Poly::x_minus(Rat(n))));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        GroupElement g = random_group_element(rng, pp, d, prec);
        GroupElement h = random_group_element(rng, pp, d, prec);
        PadicMat lhs = padic_mat_mul(v_functor(reps[i], g, prec), v_functor(reps[i], h, prec));
        PadicMat rhs = v_functor(reps[i], group_mul(g, h), prec);
        report.add_bool("V functor group law, representation " + std::to_string(i),
                        padic_mat_congruent(lhs, rhs, prec));
    }
}

int cmd_verify(const std::string& suite, int d, const std::string& alphas, int qmax,
               int trials, int intertwiners, std::uint64_t seed, const Int& p, int c,
               int prec, const OutputOpts& opts) {
    Report report;
    report.command = "verify " + suite;
    report.has_seed = true;
    report.seed = seed;
    Rng rng(seed);
    std::string csv;
    if (suite == "caL-table") {
        caL_checks(report, d, parse_alphas(alphas), qmax < 0 ? d + 1 : qmax, &csv);
    } else if (suite == "cup") {
        cup_checks(report, d);
    } else if (suite == "euler") {
        euler_suite(report, rng, trials, d, 6);
    } else if (suite == "shift") {
        shift_suite(report, rng, trials, d);
    } else if (suite == "zsplit") {
        zsplit_suite(report, rng, trials, intertwiners);
    } else if (suite == "clas") {
        clas_suite(report, rng, trials);
    } else if (suite == "padic") {
        padic_suite(report, rng, PadicParams(p, c), d, prec, trials);
    } else if (suite == "relations") {
        auto rr = relation_check(d);
        for (const auto& item : rr.items) report.add_bool(item.name, item.pass);
    } else {
        throw CLI::ValidationError("unknown suite: " + suite);
    }
    std::string human = csv;
    int failures = 0;
    for (const Check& chk : report.checks)
        if (!chk.pass) ++failures;
    human += report.command + ": " + std::to_string(report.checks.size() - failures) + "/" +
             std::to_string(report.checks.size()) + " checks passed\n";
    if (failures) {
        for (const Check& chk : report.checks)
            if (!chk.pass)
                human += "FAIL  " + chk.name + " = " + chk.computed + " (expected " +
                         chk.expected + ")\n";
    }
    return finish(report, opts, human);
}

std::vector<PadicScalar> parse_z(const Int& p, int prec, const std::string& zs) {
    std::vector<PadicScalar> z;
    std::stringstream ss(zs);
    std::string tok;
    while (std::getline(ss, tok, ',')) z.emplace_back(p, prec, Int(tok));
    return z;
}

int cmd_padic(const std::string& what, const Int& p, int c, int prec,
              const std::string& a_or_u, const std::string& zs, const OutputOpts& opts) {
    PadicParams pp(p, c);
    Report report;
    report.command = "padic " + what;
    std::string human;
    if (what == "exp") {
        std::vector<PadicScalar> b = parse_z(p, prec, zs);
        AlgebraElement x(pp, PadicScalar(p, prec, Int(a_or_u)), b);
        GroupElement g = mat_exp(x);
        report.extra["u"] = padic_to_json(g.u);
        Json z = Json::array();
        human = "u = " + g.u.str() + "\n";
        for (int j = 0; j < g.d(); ++j) {
            z.push_back(padic_to_json(g.z[j]));
            human += "z_" + std::to_string(j + 1) + " = " + g.z[j].str() + "\n";
        }
        report.extra["z"] = std::move(z);
    } else if (what == "log") {
        GroupElement g(pp, PadicScalar(p, prec, Int(a_or_u)), parse_z(p, prec, zs));
        AlgebraElement x = mat_log(g);
        report.extra["a"] = padic_to_json(x.a);
        Json b = Json::array();
        human = "a = " + x.a.str() + "\n";
        for (int j = 0; j < x.d(); ++j) {
            b.push_back(padic_to_json(x.b[j]));
            human += "b_" + std::to_string(j + 1) + " = " + x.b[j].str() + "\n";
        }
        report.extra["b"] = std::move(b);
    } else if (what == "cocycle") {
        GroupElement g(pp, PadicScalar(p, prec, Int(a_or_u)), parse_z(p, prec, zs));
        PadicScalar lc = cocycle_logchi(g);
        report.extra["logchi"] = padic_to_json(lc);
        human = "log chi = " + lc.str() + "\n";
        Json s = Json::array();
        for (int j = 1; j <= g.d(); ++j) {
            s.push_back(padic_to_json(cocycle_s(j, g)));
            human += "s_" + std::to_string(j) + " = " + cocycle_s(j, g).str() + "\n";
        }
        report.extra["s"] = std::move(s);
    } else {
        throw CLI::ValidationError("padic action must be exp, log or cocycle");
    }
    report.extra["p"] = p.str();
    report.extra["prec"] = prec;
    return finish(report, opts, human);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lie algebra cohomology and p-adic group toolkit"};
    app.require_subcommand(1);

    OutputOpts opts;
    app.add_flag("--json", opts.json, "emit the JSON report on stdout");
    app.add_option("--out", opts.out_file, "write the JSON report to a file");

    std::string file, sub_name = "full";
    auto* dims = app.add_subcommand("dims", "cohomology dimensions of a rep file");
    dims->add_option("file", file)->required();
    dims->add_option("--sub", sub_name, "full | geom | cycl");

    auto* classify = app.add_subcommand("classify", "length, block split, irreducibility");
    classify->add_option("file", file)->required();

    int d = 2;
    auto* cup_table = app.add_subcommand("cup-table", "cup product spanning ranks");
    cup_table->add_option("--d", d, "number of geometric generators");

    std::string suite, alphas = "-2..6,half,sqrt2";
    int qmax = -1, trials = 50, intertwiners = 20, c = 1, prec = 20;
    std::uint64_t seed = 1;
    std::string p_str = "3";
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite,
                       "caL-table | cup | euler | shift | zsplit | clas | padic | relations")
        ->required();
    verify->add_option("--d", d);
    verify->add_option("--alphas", alphas, "e.g. -2..6,half,sqrt2");
    verify->add_option("--qmax", qmax);
    verify->add_option("--trials", trials);
    verify->add_option("--intertwiners", intertwiners);
    verify->add_option("--seed", seed);
    verify->add_option("--p", p_str);
    verify->add_option("--c", c);
    verify->add_option("--prec", prec);

    std::string what, a_or_u = "0", zs;
    auto* padic = app.add_subcommand("padic", "evaluate exp, log or the cocycles");
    padic->add_option("what", what, "exp | log | cocycle")->required();
    padic->add_option("--p", p_str);
    padic->add_option("--c", c);
    padic->add_option("--prec", prec);
    padic->add_option("--a", a_or_u, "X_0 coordinate (exp) or the unit u (log/cocycle)");
    padic->add_option("--z", zs, "comma-separated geometric coordinates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*dims) return cmd_dims(file, sub_name, opts);
        if (*classify) return cmd_classify(file, opts);
        if (*cup_table) return cmd_cup_table(d, opts);
        if (*verify)
            return cmd_verify(suite, d, alphas, qmax, trials, intertwiners, seed, Int(p_str),
                              c, prec, opts);
        if (*padic) return cmd_padic(what, Int(p_str), c, prec, a_or_u, zs, opts);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

/*
 * Copyright 2026 The mubkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * Command-line front end. run() is the whole program so tests drive it
 * in-process and capture streams.
 *
 * Exit codes: 0 success and every verdict true; 1 a verification verdict is
 * false; 2 usage or parameter errors. Outputs are byte-stable for identical
 * arguments: fixed iteration orders, no wall-clock or locale dependence,
 * floats printed with 17 significant digits. MUBKIT_TOLERANCE overrides the
 * default 1e-9 classification tolerance. --seed is accepted globally and
 * fixed to 0 by default; current subcommands are fully deterministic.
 */

#pragma once

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mubkit/json_io.hpp"
#include "mubkit/phase.hpp"

namespace mubkit::cli {

inline double tolerance_from_env() {
    const char* env = std::getenv("MUBKIT_TOLERANCE");
    if (!env || !*env) return 1e-9;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
        throw std::invalid_argument("MUBKIT_TOLERANCE is not a positive number");
    return v;
}

namespace detail {

inline std::string join_coeffs(const std::vector<int>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(c[i]);
    }
    return s;
}

inline void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << payload;
    else
        write_file(out_path, payload);
}

inline int run_field_table(int p, int m, const std::vector<int>& modulus,
                           const std::string& format, const std::string& out_path,
                           std::ostream& out) {
    std::optional<std::vector<int>> mod;
    if (!modulus.empty()) mod = modulus;
    Field f(p, m, mod);
    if (format == "json") {
        JDoc d = JDoc::obj();
        d.set("descriptor", field_descriptor_json(f));
        JDoc els = JDoc::arr();
        for (long i = 0; i < f.q(); ++i) {
            FieldElement x = f.element(i);
            JDoc e = JDoc::obj();
            e.set("idx", JDoc::integer(i));
            JDoc cs = JDoc::arr();
            for (int c : x.coeffs()) cs.push(JDoc::integer(c));
            e.set("coeffs", std::move(cs));
            e.set("trace", JDoc::integer(f.trace(x)));
            e.set("dlog", x.is_zero() ? JDoc::null() : JDoc::integer(f.dlog(x)));
            els.push(std::move(e));
        }
        d.set("elements", std::move(els));
        emit(d.dump(), out_path, out);
    } else {
        std::string csv = "idx,coeffs,trace,dlog\n";
        for (long i = 0; i < f.q(); ++i) {
            FieldElement x = f.element(i);
            csv += std::to_string(i) + "," + join_coeffs(x.coeffs()) + "," +
                   std::to_string(f.trace(x)) + ",";
            if (!x.is_zero()) csv += std::to_string(f.dlog(x));
            csv += "\n";
        }
        emit(csv, out_path, out);
    }
    return 0;
}

inline int run_ring_table(int m, const std::string& format, const std::string& out_path,
                          std::ostream& out) {
    GaloisRing r(m);
    if (format == "json") {
        JDoc d = JDoc::obj();
        d.set("descriptor", ring_descriptor_json(r));
        JDoc els = JDoc::arr();
        for (long i = 0; i < r.size(); ++i) {
            RingElement y = r.element(i);
            auto [a, b] = r.decompose(y);
            JDoc e = JDoc::obj();
            e.set("idx", JDoc::integer(i));
            JDoc cs = JDoc::arr();
            for (int c : y.coeffs()) cs.push(JDoc::integer(c));
            e.set("coeffs", std::move(cs));
            e.set("teich_a", JDoc::integer(r.index(a)));
            e.set("teich_b", JDoc::integer(r.index(b)));
            e.set("frobenius", JDoc::integer(r.index(r.frobenius(y))));
            e.set("trace", JDoc::integer(r.trace(y)));
            els.push(std::move(e));
        }
        d.set("elements", std::move(els));
        emit(d.dump(), out_path, out);
    } else {
        std::string csv = "idx,coeffs,teich_a,teich_b,frobenius,trace\n";
        for (long i = 0; i < r.size(); ++i) {
            RingElement y = r.element(i);
            auto [a, b] = r.decompose(y);
            csv += std::to_string(i) + "," + join_coeffs(y.coeffs()) + "," +
                   std::to_string(r.index(a)) + "," + std::to_string(r.index(b)) + "," +
                   std::to_string(r.index(r.frobenius(y))) + "," + std::to_string(r.trace(y)) +
                   "\n";
        }
        emit(csv, out_path, out);
    }
    return 0;
}

inline int run_gauss_table(int p, int m, const std::string& out_path, std::ostream& out,
                           double tol) {
    Field f(p, m);
    std::string csv = "q,k,Re(G),Im(G),|G|,bound,ok\n";
    bool all_ok = true;
    for (long k = 0; k < f.q() - 1; ++k) {
        // k = 0 reports the trivial-pair identity (q-1); k != 0 the nontrivial
        // pair against sqrt(q)
        SumReport rep = gauss_sum(f, k, /*use_trivial_additive=*/k == 0, tol);
        all_ok = all_ok && rep.bound_satisfied;
        csv += std::to_string(f.q()) + "," + std::to_string(k) + "," +
               format_double(rep.value.real()) + "," + format_double(rep.value.imag()) + "," +
               format_double(rep.magnitude) + "," + format_double(*rep.bound) + "," +
               (rep.bound_satisfied ? "1" : "0") + "\n";
    }
    emit(csv, out_path, out);
    return all_ok ? 0 : 1;
}

inline int run_weil_check(int p, int m, int degree, const std::string& out_path, std::ostream& out,
                          double tol) {
    Field f(p, m);
    if (degree < 1) throw std::invalid_argument("weil-check: degree must be >= 1");
    double combos = 1.0;
    for (int i = 0; i < degree; ++i) combos *= static_cast<double>(f.q());
    if (combos > 1e6) throw std::invalid_argument("weil-check: too many polynomials to enumerate");

    std::string csv = "q,coeffs,Re(W),Im(W),|W|,bound,ok\n";
    bool all_ok = true;
    const long count = ipow(f.q(), degree);
    for (long t = 0; t < count; ++t) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(degree + 1);
        long v = t;
        std::string cs;
        for (int i = 0; i < degree; ++i) {
            coeffs.push_back(f.element(v % f.q()));
            cs += std::to_string(v % f.q()) + " ";
            v /= f.q();
        }
        coeffs.push_back(f.one());  // monic
        cs += "1";
        SumReport rep = weil_sum(f, coeffs, tol);
        all_ok = all_ok && rep.bound_satisfied;
        csv += std::to_string(f.q()) + "," + cs + "," + format_double(rep.value.real()) + "," +
               format_double(rep.value.imag()) + "," + format_double(rep.magnitude) + ",";
        if (rep.bound) csv += format_double(*rep.bound);
        csv += ",";
        csv += (rep.bound_satisfied ? "1" : "0");
        csv += "\n";
    }
    emit(csv, out_path, out);
    return all_ok ? 0 : 1;
}

inline int run_mub_gen(bool ring, int p, int m, long k, const std::string& out_path,
                       std::ostream& out, std::ostream& err) {
    JDoc d = JDoc::obj();
    if (ring) {
        if (p != 0 && p != 2) {
            err << "error: --ring builds GR(4,m); --p must be 2 or omitted\n";
            return 2;
        }
        GaloisRing r(m);
        d.set("kind", JDoc::str("ring"));
        d.set("p", JDoc::integer(2));
        d.set("m", JDoc::integer(m));
        d.set("q", JDoc::integer(r.teich_count()));
        d.set("k", JDoc::integer(k));
        d.set("include_computational", JDoc::boolean(true));
        d.set("descriptor", ring_descriptor_json(r));
        JDoc bases = JDoc::arr();
        for (const Basis& b : mub_ring_family(r, k)) bases.push(basis_json(b));
        d.set("bases", std::move(bases));
    } else {
        if (p == 0) {
            err << "error: --p is required without --ring\n";
            return 2;
        }
        if (p == 2) {
            err << "error: the quadratic phase construction is unavailable in characteristic 2 "
                   "(gcd(2, q) = 2 breaks the Weil-sum orthogonality argument); "
                   "use `mub gen --ring --m " +
                       std::to_string(m) + "` for m-qubit bases\n";
            return 2;
        }
        Field f(p, m);
        d.set("kind", JDoc::str("field"));
        d.set("p", JDoc::integer(p));
        d.set("m", JDoc::integer(m));
        d.set("q", JDoc::integer(f.q()));
        d.set("k", JDoc::integer(k));
        d.set("include_computational", JDoc::boolean(true));
        d.set("descriptor", field_descriptor_json(f));
        JDoc bases = JDoc::arr();
        for (const Basis& b : mub_field_family(f, k)) bases.push(basis_json(b));
        d.set("bases", std::move(bases));
    }
    write_file(out_path, d.dump());
    out << "wrote " << out_path << "\n";
    return 0;
}

inline void print_mub_table(const MubReport& rep, const std::vector<std::string>& labels,
                            std::ostream& out) {
    out << "bases: " << rep.base_count << "  dim: " << rep.dim
        << "  tolerance: " << format_double(rep.tolerance) << "\n";
    out << "pairwise blocks (O orthonormal, U unbiased, X violations):\n";
    for (size_t i = 0; i < rep.blocks.size(); ++i) {
        out << "  ";
        for (size_t j = 0; j < rep.blocks[i].size(); ++j) {
            const std::string& c = rep.blocks[i][j];
            out << (c == "orthonormal" ? 'O' : c == "unbiased" ? 'U' : 'X');
        }
        out << "  " << (i < labels.size() ? labels[i] : "") << "\n";
    }
    out << "pair counts: identical " << rep.count_identical << ", orthogonal "
        << rep.count_orthogonal << ", unbiased " << rep.count_unbiased << ", other "
        << rep.count_other << "\n";
    out << "verdict: " << (rep.verdict ? "complete MUB set" : "NOT a complete MUB set") << "\n";
}

inline int run_mub_verify(const std::string& path, const std::string& report_path,
                          std::ostream& out, double tol) {
    ParsedMubFile file = parse_mub_file(read_file(path));
    MubReport rep = verify_mub_set(file.bases, file.include_computational, tol);
    double exact_mismatch = 0.0;
    for (const Basis& b : file.bases)
        for (const StateVector& v : b.vectors())
            exact_mismatch = std::max(exact_mismatch, v.exact_mismatch());

    std::vector<std::string> labels;
    for (const Basis& b : file.bases) labels.push_back(b.label());
    if (file.include_computational) labels.push_back("computational");
    print_mub_table(rep, labels, out);
    out << "exact-form mismatch: " << format_double(exact_mismatch) << "\n";

    JDoc d = mub_report_json(rep);
    d.set("exact_mismatch", JDoc::number(exact_mismatch));
    const std::string payload = d.dump();
    if (report_path.empty())
        out << payload;
    else
        write_file(report_path, payload);
    return rep.verdict ? 0 : 1;
}

inline int run_phase_stats(int p, int m, long a_idx, long k, double beta, long field_beta_idx,
                           const std::string& out_path, std::ostream& out, double tol) {
    Field f(p, m);
    if (a_idx < 0 || a_idx >= f.q()) throw std::invalid_argument("phase-stats: --a out of range");
    Basis basis = mub_field(f, f.element(a_idx), k);
    StateVector state;
    const bool use_field_beta = field_beta_idx >= 0;
    if (use_field_beta) {
        if (field_beta_idx >= f.q())
            throw std::invalid_argument("phase-stats: --field-beta out of range");
        state = pure_state_field(f, f.element(field_beta_idx));
    } else {
        state = pure_state_real(f.q(), beta);
    }
    PhaseStatistics st = phase_statistics(state, basis);

    // second route for the expectation: quadratic form in the closed operator
    OperatorMatrix theta = phase_operator_closed(f, f.element(a_idx), k);
    cplx expect2{0.0, 0.0};
    for (long i = 0; i < f.q(); ++i)
        for (long j = 0; j < f.q(); ++j)
            expect2 += std::conj(state.amplitude(i)) * theta.at(i, j) * state.amplitude(j);

    double norm_sum = 0.0;
    for (double pb : st.distribution) norm_sum += pb;
    const bool norm_ok = std::abs(norm_sum - 1.0) <= 1e-10;
    const bool var_ok = std::abs(st.variance - st.variance_expansion) <= tol;
    const bool exp_ok = std::abs(st.expectation - expect2.real()) <= tol;

    JDoc d = JDoc::obj();
    d.set("p", JDoc::integer(p));
    d.set("m", JDoc::integer(m));
    d.set("q", JDoc::integer(f.q()));
    d.set("a", JDoc::integer(a_idx));
    d.set("k", JDoc::integer(k));
    if (use_field_beta)
        d.set("beta_field_idx", JDoc::integer(field_beta_idx));
    else
        d.set("beta", JDoc::number(beta));
    JDoc dist = JDoc::arr();
    for (double pb : st.distribution) dist.push(JDoc::number(pb));
    d.set("distribution", std::move(dist));
    d.set("expectation", JDoc::number(st.expectation));
    d.set("expectation_closed", JDoc::number(expect2.real()));
    d.set("variance", JDoc::number(st.variance));
    d.set("variance_expansion", JDoc::number(st.variance_expansion));
    d.set("diagonal_contribution", JDoc::number(st.diagonal_contribution));
    JDoc checks = JDoc::obj();
    checks.set("normalization_ok", JDoc::boolean(norm_ok));
    checks.set("variance_routes_agree", JDoc::boolean(var_ok));
    checks.set("expectation_routes_agree", JDoc::boolean(exp_ok));
    d.set("checks", std::move(checks));

    const std::string payload = d.dump();
    if (out_path.empty())
        out << payload;
    else {
        write_file(out_path, payload);
        out << "wrote " << out_path << "\n";
    }
    return (norm_ok && var_ok && exp_ok) ? 0 : 1;
}

inline int run_bell_gen(const std::string& kind, long q, int p, int m, const std::string& out_path,
                        std::ostream& out, std::ostream& err) {
    BellFamily fam;
    JDoc extra = JDoc::obj();
    if (kind == "mult") {
        if (q < 2) {
            err << "error: bell gen --kind mult requires --q >= 2\n";
            return 2;
        }
        fam = bell_mult_family(q);
    } else if (kind == "field") {
        if (p == 0) {
            err << "error: bell gen --kind field requires --p (odd prime)\n";
            return 2;
        }
        Field f(p, m > 0 ? m : 1);
        fam = bell_field_family(f);
        extra.set("descriptor", field_descriptor_json(f));
    } else if (kind == "ring") {
        if (m < 1) {
            err << "error: bell gen --kind ring requires --m >= 1\n";
            return 2;
        }
        GaloisRing r(m);
        fam = bell_ring_family(r);
        extra.set("descriptor", ring_descriptor_json(r));
    } else {
        err << "error: --kind must be one of mult|field|ring\n";
        return 2;
    }
    JDoc d = bell_family_json(fam);
    if (kind != "mult") {
        if (p != 0) d.set("p", JDoc::integer(p));
        if (m > 0) d.set("m", JDoc::integer(m));
    }
    write_file(out_path, d.dump());
    out << "wrote " << out_path << "\n";
    return 0;
}

inline int run_bell_verify(const std::string& path, const std::string& report_path,
                           std::ostream& out, double tol) {
    BellFamily fam = parse_bell_file(read_file(path));
    BellReport rep = verify_bell_structure(fam, tol);
    out << "kind: " << rep.kind << "  q: " << rep.q << "  states: " << rep.state_count << "\n";
    out << "max entanglement residual: " << format_double(rep.max_entanglement_residual) << "\n";
    out << "max overlap error: " << format_double(rep.max_overlap_error) << "\n";
    out << "verdict: " << (rep.verdict ? "ok" : "FAILED") << "\n";
    const std::string payload = bell_report_json(rep).dump();
    if (report_path.empty())
        out << payload;
    else
        write_file(report_path, payload);
    return rep.verdict ? 0 : 1;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"mubkit: mutually unbiased bases, character sums and Bell families over "
                 "Galois fields and rings"};
    app.require_subcommand(1);
    long seed = 0;
    app.add_option("--seed", seed, "seed for any randomized check (all current ones are exact)")
        ->default_val(0);

    // field-table
    auto* ft = app.add_subcommand("field-table", "enumerate GF(p^m): idx, coeffs, trace, dlog");
    int ft_p = 0, ft_m = 1;
    std::vector<int> ft_mod;
    std::string ft_fmt = "csv", ft_out;
    ft->add_option("--p", ft_p, "characteristic (prime)")->required();
    ft->add_option("--m", ft_m, "extension degree")->default_val(1);
    ft->add_option("--modulus", ft_mod, "modulus coefficients c0,c1,...,1 (low to high)")
        ->delimiter(',');
    ft->add_option("--format", ft_fmt, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    ft->add_option("--out", ft_out, "output file (stdout when omitted)");

    // ring-table
    auto* rt = app.add_subcommand("ring-table", "enumerate GR(4,m): Teichmueller parts, Frobenius, trace");
    int rt_m = 1;
    std::string rt_fmt = "csv", rt_out;
    rt->add_option("--m", rt_m, "degree")->required();
    rt->add_option("--format", rt_fmt, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    rt->add_option("--out", rt_out, "output file");

    // gauss-table
    auto* gt = app.add_subcommand("gauss-table", "Gauss sums G(psi_k, kappa) for all k");
    int gt_p = 0, gt_m = 1;
    std::string gt_out;
    gt->add_option("--p", gt_p, "characteristic (prime)")->required();
    gt->add_option("--m", gt_m, "extension degree")->default_val(1);
    gt->add_option("--out", gt_out, "output file");

    // weil-check
    auto* wc = app.add_subcommand("weil-check", "Weil bound over all monic polynomials of a degree");
    int wc_p = 0, wc_m = 1, wc_deg = 2;
    std::string wc_out;
    wc->add_option("--p", wc_p, "characteristic (prime)")->required();
    wc->add_option("--m", wc_m, "extension degree")->default_val(1);
    wc->add_option("--degree", wc_deg, "polynomial degree to scan")->default_val(2);
    wc->add_option("--out", wc_out, "output file");

    // mub gen/verify
    auto* mub = app.add_subcommand("mub", "generate or verify MUB sets");
    mub->require_subcommand(1);
    auto* mg = mub->add_subcommand("gen", "generate the full basis family plus computational");
    int mg_p = 0, mg_m = 1;
    long mg_k = 0;
    bool mg_ring = false;
    std::string mg_out;
    mg->add_option("--p", mg_p, "characteristic (prime); omit with --ring");
    mg->add_option("--m", mg_m, "extension degree")->required();
    mg->add_option("--k", mg_k, "multiplicative character index")->default_val(0);
    mg->add_flag("--ring", mg_ring, "use the Galois ring GR(4,m) construction (m-qubit bases)");
    mg->add_option("--out", mg_out, "output JSON file")->required();
    auto* mv = mub->add_subcommand("verify", "verify a generated MUB file");
    std::string mv_file, mv_report;
    mv->add_option("file", mv_file, "MUB JSON file")->required();
    mv->add_option("--report", mv_report, "write the JSON report here instead of stdout");

    // phase-stats
    auto* ps = app.add_subcommand("phase-stats", "phase distribution/expectation/variance of a pure state");
    int ps_p = 0, ps_m = 1;
    long ps_a = 0, ps_k = 0, ps_fbeta = -1;
    double ps_beta = 0.0;
    std::string ps_out;
    ps->add_option("--p", ps_p, "characteristic (odd prime)")->required();
    ps->add_option("--m", ps_m, "extension degree")->default_val(1);
    ps->add_option("--a", ps_a, "basis index (element index)")->default_val(0);
    ps->add_option("--k", ps_k, "multiplicative character index")->default_val(0);
    ps->add_option("--beta", ps_beta, "real phase slope of the pure state")->default_val(0.0);
    ps->add_option("--field-beta", ps_fbeta, "field-valued beta (element index); overrides --beta");
    ps->add_option("--out", ps_out, "output JSON file (stdout when omitted)");

    // bell gen/verify
    auto* bell = app.add_subcommand("bell", "generate or verify Bell-state families");
    bell->require_subcommand(1);
    auto* bg = bell->add_subcommand("gen", "generate a full Bell family");
    std::string bg_kind, bg_out;
    long bg_q = 0;
    int bg_p = 0, bg_m = 0;
    bg->add_option("--kind", bg_kind, "mult | field | ring")->required();
    bg->add_option("--q", bg_q, "local dimension (mult kind)");
    bg->add_option("--p", bg_p, "characteristic (field kind)");
    bg->add_option("--m", bg_m, "extension degree (field/ring kinds)");
    bg->add_option("--out", bg_out, "output JSON file")->required();
    auto* bv = bell->add_subcommand("verify", "verify a generated Bell family file");
    std::string bv_file, bv_report;
    bv->add_option("file", bv_file, "Bell JSON file")->required();
    bv->add_option("--report", bv_report, "write the JSON report here instead of stdout");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const double tol = tolerance_from_env();
        if (ft->parsed()) return detail::run_field_table(ft_p, ft_m, ft_mod, ft_fmt, ft_out, out);
        if (rt->parsed()) return detail::run_ring_table(rt_m, rt_fmt, rt_out, out);
        if (gt->parsed()) return detail::run_gauss_table(gt_p, gt_m, gt_out, out, tol);
        if (wc->parsed()) return detail::run_weil_check(wc_p, wc_m, wc_deg, wc_out, out, tol);
        if (mub->parsed()) {
            if (mg->parsed()) return detail::run_mub_gen(mg_ring, mg_p, mg_m, mg_k, mg_out, out, err);
            return detail::run_mub_verify(mv_file, mv_report, out, tol);
        }
        if (ps->parsed())
            return detail::run_phase_stats(ps_p, ps_m, ps_a, ps_k, ps_beta, ps_fbeta, ps_out, out, tol);
        if (bell->parsed()) {
            if (bg->parsed()) return detail::run_bell_gen(bg_kind, bg_q, bg_p, bg_m, bg_out, out, err);
            return detail::run_bell_verify(bv_file, bv_report, out, tol);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mubkit::cli

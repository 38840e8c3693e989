/* Copyright 2026 The Milnor Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "milnor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "milnor/conflie.hpp"
#include "milnor/freelie.hpp"
#include "milnor/json.hpp"
#include "milnor/kappa.hpp"
#include "milnor/magnus.hpp"
#include "milnor/mulinks.hpp"
#include "milnor/random.hpp"
#include "milnor/rfree.hpp"

namespace milnor::cli {

namespace {

using milnor::json::Json;

struct Options {
    int n = 0;
    int degree = 0; // 0: default n-1
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t trials = 50;
    std::string file;
    std::string word;
};

struct Output {
    std::ostream& out;
    std::ostream& err;
};

void emit(Output& io, const Json& j) { io.out << j.dump(2) << "\n"; }

std::string read_input(const Options& o) {
    if (!o.file.empty()) {
        if (!o.word.empty()) throw DomainError("give either a word or --file, not both");
        std::ifstream in(o.file);
        if (!in) throw DomainError("cannot read file '" + o.file + "'");
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    if (o.word.empty()) throw DomainError("missing word (positional argument or --file)");
    return o.word;
}

StringLink read_link(const Options& o) { return StringLink::parse(read_input(o), o.n); }

std::string sigma_text(const Permutation& s) { return "(" + join(s) + ")"; }

// Verbs

int cmd_mu(const Options& o, Output& io) {
    const StringLink link = read_link(o);
    const int g = link.generator_count();
    const int degree = o.degree > 0 ? o.degree : std::max(1, g);
    const NcPoly p = magnus(link.word(), g, degree, true);
    Json rows = Json::array();
    std::ostringstream text;
    text << "mu(I;" << o.n << ") for n=" << o.n << ", |I| <= " << degree << "\n";
    for (const auto& index : distinct_multiindices(g, std::min(degree, g))) {
        const Integer v = mu_coeff(p, index);
        rows.push_back({{"I", index}, {"j", o.n}, {"value", v.get_str()}});
        text << "mu(" << join(index) << ";" << o.n << ") = " << v << "\n";
    }
    if (o.json)
        emit(io, {{"n", o.n}, {"degree", degree}, {"mu", std::move(rows)}});
    else
        io.out << text.str();
    return ok;
}

int cmd_nf(const Options& o, Output& io) {
    const NormalForm nf = normal_form(read_link(o));
    if (o.json) {
        emit(io, json::encode(nf));
        return ok;
    }
    io.out << "normal form, n=" << nf.components << "\n";
    bool any = false;
    for (const auto& [key, e] : nf.exponents) {
        if (e == 0) continue;
        any = true;
        io.out << "e(I=" << sigma_text(key.first) << ", sigma=" << sigma_text(key.second) << ") = " << e << "\n";
    }
    if (!any) io.out << "trivial\n";
    return ok;
}

int cmd_brunnian(const Options& o, Output& io) {
    const auto witness = brunnian_witness(read_link(o));
    if (o.json) {
        emit(io, {{"n", o.n}, {"brunnian", !witness}, {"witness", witness ? Json(*witness) : Json(nullptr)}});
    } else {
        io.out << "brunnian: " << (witness ? "false" : "true") << "\n";
        if (witness) io.out << "witness: deleting strand " << *witness << " leaves a nontrivial link\n";
    }
    return witness ? property_failure : ok;
}

int cmd_kappa(const Options& o, Output& io) {
    const KappaCoeffs k = kappa_coeffs(read_link(o));
    if (o.json) {
        emit(io, json::encode(k));
    } else {
        io.out << "kappa coefficients in the B(n,sigma) basis, n=" << k.components << "\n";
        for (const auto& [sigma, v] : k.coeffs) io.out << "sigma=" << sigma_text(sigma) << ": " << v << "\n";
    }
    return ok;
}

Json rank_suite(int n, bool& all_ok) {
    Json quotient = Json::array();
    for (int k = 1; k <= n - 1; ++k) {
        const QuotientRank r = quotient_rank(n, k);
        all_ok = all_ok && r.formula == r.enumerated;
        quotient.push_back({{"k", k}, {"formula", r.formula.get_str()}, {"enumerated", r.enumerated.get_str()}});
    }
    Json out = {{"quotient_rank", std::move(quotient)}};
    if (n >= 3) {
        const Integer expected = factorial(static_cast<unsigned>(n - 2));
        const long dim = multilinear_dim(n);
        const BtfKernelReport btf = btf_kernel(n);
        all_ok = all_ok && expected == dim && expected == static_cast<unsigned long>(btf.kernel_dim) &&
                 btf.span_equal && btf.btf_in_kernel && btf.pbw_determinant != 0;
        out["expected"] = expected.get_str();
        out["multilinear_dim"] = dim;
        out["btf_kernel"] = json::encode(btf);
    }
    return out;
}

int cmd_dims(const Options& o, Output& io) {
    bool all_ok = true;
    const Json suite = rank_suite(o.n, all_ok);
    if (o.json) {
        Json j = {{"n", o.n}, {"ok", all_ok}};
        j.update(suite);
        emit(io, j);
    } else {
        io.out << "n=" << o.n << "\n";
        io.out << "k  (k-1)!*C(n-1,k)  enumerated\n";
        for (const auto& row : suite["quotient_rank"])
            io.out << row["k"].get<int>() << "  " << row["formula"].get<std::string>() << "  "
                   << row["enumerated"].get<std::string>() << "\n";
        if (o.n >= 3) {
            io.out << "(n-2)! = " << suite["expected"].get<std::string>() << "\n";
            io.out << "multilinear_dim = " << suite["multilinear_dim"].get<long>() << "\n";
            io.out << "btf_kernel_rank = " << suite["btf_kernel"]["kernel_dim"].get<std::size_t>()
                   << (suite["btf_kernel"]["span_equal"].get<bool>() ? " (kernel = span of t(n,sigma))" : "")
                   << "\n";
        }
        io.out << (all_ok ? "all ranks agree\n" : "RANK MISMATCH\n");
    }
    return all_ok ? ok : property_failure;
}

int cmd_fourT(const Options& o, Output& io) {
    if (o.n < 3) throw DomainError("fourT: need n >= 3");
    const FourTReport r = check_4T_report(DKAlgebra(o.n));
    if (o.json) {
        emit(io, json::encode(r));
    } else {
        io.out << "4T relations, n=" << o.n << ": " << r.triangle_instances << " triangle, " << r.disjoint_instances
               << " disjoint, " << r.jacobi_instances << " Jacobi instances\n";
        for (const auto& f : r.failures) io.out << "FAIL " << f << "\n";
        io.out << (r.ok() ? "all relations hold\n" : "relations violated\n");
    }
    return r.ok() ? ok : property_failure;
}

int cmd_verify(const Options& o, Output& io) {
    const int n = o.n;
    if (n < 3 || n > 6) throw DomainError("verify: need 3 <= n <= 6");
    const MainTheoremReport main = verify_main_theorem(n, o.trials, o.seed);

    // Product formula on random pairs, one stream per pair after the trials.
    std::size_t pf_failures = 0;
    Json pf_examples = Json::array();
    for (std::size_t i = 0; i < o.trials; ++i) {
        Rng rng(o.seed, o.trials + i);
        const StringLink z1(random_word(rng, n - 1, 12), n);
        const StringLink z2(random_word(rng, n - 1, 12), n);
        const auto bad = product_formula_failures(z1, z2, n - 1);
        pf_failures += bad.size();
        if (!bad.empty() && pf_examples.size() < 5)
            pf_examples.push_back({{"pair_index", i}, {"z1", z1.word().render()}, {"z2", z2.word().render()}});
    }

    // Kronecker identity on tau(n, sigma).
    std::size_t kr_failures = 0;
    const auto perms = permutations_from_two(n - 1);
    for (const auto& sigma : perms) {
        const StringLink t = tau_n_sigma(n, sigma);
        for (const auto& xi : perms) {
            Multiindex index{1};
            index.insert(index.end(), xi.begin(), xi.end());
            if (closure_mu(t, index) != (xi == sigma ? 1 : 0)) ++kr_failures;
        }
        for (const auto& [index, v] : closure_mu_table(t, n - 2))
            if (v != 0) ++kr_failures;
    }

    bool ranks_ok = true;
    Json ranks = rank_suite(n, ranks_ok);
    const bool all_ok = main.ok() && pf_failures == 0 && kr_failures == 0 && ranks_ok;

    if (o.json) {
        Json j = json::encode(main);
        j["suites"] = {
            {"main_theorem", {{"ok", main.ok()}}},
            {"product_formula", {{"pairs", o.trials}, {"failures", pf_failures}, {"examples", pf_examples}}},
            {"kronecker", {{"permutations", perms.size()}, {"failures", kr_failures}}},
            {"ranks", {{"ok", ranks_ok}, {"detail", std::move(ranks)}}}};
        j["ok"] = all_ok;
        emit(io, j);
    } else {
        io.out << "n=" << n << " seed=" << o.seed << " prng=" << main.prng << "\n";
        io.out << "main theorem: " << main.trials << " trials, " << main.failures.size() << " failures\n";
        io.out << "product formula: " << o.trials << " pairs, " << pf_failures << " failures\n";
        io.out << "kronecker: " << perms.size() << "x" << perms.size() << ", " << kr_failures << " failures\n";
        io.out << "ranks: " << (ranks_ok ? "ok" : "MISMATCH") << "\n";
        io.out << (all_ok ? "verified\n" : "VERIFICATION FAILED\n");
    }
    return all_ok ? ok : property_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Output io{out, err};
    Options o;
    CLI::App app{"Milnor invariants, reduced free groups and Drinfeld-Kohno Lie algebras", "milnor"};
    app.require_subcommand(1);

    struct Verb {
        const char* name;
        const char* help;
        bool takes_word;
        int (*fn)(const Options&, Output&);
    };
    const Verb verbs[] = {
        {"mu", "distinct-index mu(I;n) of the closure", true, cmd_mu},
        {"nf", "normal form in RF(n-1)", true, cmd_nf},
        {"brunnian", "Brunnian test with a strand-deletion witness", true, cmd_brunnian},
        {"kappa", "kappa coefficients of a Brunnian string link", true, cmd_kappa},
        {"verify", "main theorem, product formula, Kronecker and rank suites", false, cmd_verify},
        {"dims", "rank tables", false, cmd_dims},
        {"fourT", "4T relation certificate", false, cmd_fourT},
    };
    std::vector<std::pair<CLI::App*, const Verb*>> subs;
    for (const Verb& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("-n", o.n, "number of components")->required();
        sub->add_flag("--json", o.json, "JSON output");
        if (v.takes_word) {
            sub->add_option("word", o.word, "word in t1..t{n-1}, e.g. \"[t1,t2] t3'\"");
            sub->add_option("--file", o.file, "read the word from a file");
        }
        if (std::string_view(v.name) == "mu") sub->add_option("--degree", o.degree, "truncation degree (default n-1)");
        if (std::string_view(v.name) == "verify") {
            sub->add_option("--seed", o.seed, "PRNG seed");
            sub->add_option("--trials", o.trials, "random trials per suite");
        }
        subs.emplace_back(sub, &v);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return usage_error;
    }

    try {
        if (o.n < 2) throw DomainError("-n must be at least 2");
        if (o.degree < 0 || (app.got_subcommand("mu") && app.get_subcommand("mu")->count("--degree") && o.degree < 1))
            throw DomainError("--degree must be at least 1");
        for (const auto& [sub, verb] : subs)
            if (sub->parsed()) return verb->fn(o, io);
        return usage_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    } catch (const NotBrunnianError& e) {
        err << "error: " << e.what() << "\n";
        return property_failure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const ConsistencyError& e) {
        err << "internal consistency check failed: " << e.what() << "\n";
        return property_failure;
    }
}

} // namespace milnor::cli

/*
   Copyright 2026 The ffperiod Authors

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

#include "ffp/cli.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ffp/cyclo.hpp"
#include "ffp/error.hpp"
#include "ffp/harness.hpp"
#include "ffp/report.hpp"
#include "ffp/spectral.hpp"
#include "ffp/symfun.hpp"
#include "ffp/zfun.hpp"

namespace ffp {

namespace {

using nlohmann::json;
using report::Format;

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar_text(v[i]);
        return s;
    }
    if (v.is_null()) return "";
    return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& kv) {
    for (const auto& [k, v] : j.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object()) {
            flatten(v, key, kv);
        } else {
            kv.emplace_back(key, scalar_text(v));
        }
    }
}

void emit(std::ostream& os, const json& j, Format f) {
    if (f == Format::Json) {
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(j, "", kv);
    if (f == Format::Text) {
        for (const auto& [k, v] : kv) os << k << ": " << v << '\n';
        return;
    }
    for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? "," : "") << kv[i].first;
    os << '\n';
    for (std::size_t i = 0; i < kv.size(); ++i) {
        const bool quote = kv[i].second.find_first_of(", \"") != std::string::npos;
        os << (i ? "," : "") << (quote ? "\"" + kv[i].second + "\"" : kv[i].second);
    }
    os << '\n';
}

gf::FieldRef base_field(u64 q) {
    auto pp = as_prime_power(q);
    if (!pp) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    return gf::make_field(pp->p, pp->m);
}

std::optional<u64> parse_subfield(const std::string& s) {
    if (s.empty() || s == "auto") return std::nullopt;
    std::size_t pos = 0;
    const u64 v = std::stoull(s, &pos);
    if (pos != s.size()) throw Error(ErrorCode::InvalidArgument, "bad --L value '" + s + "'");
    return v;
}

json verdict_json(const spectral::Verdict& v) {
    json j = {{"verdict", spectral::to_string(v.status)},
              {"modulus", v.evidence.modulus},
              {"least_period", v.evidence.least_period},
              {"threshold", report::big_json(v.evidence.threshold)}};
    if (v.evidence.subfield_order) j["subfield_order"] = v.evidence.subfield_order;
    if (v.evidence.divisor_pair) j["divisor_pair"] = {v.evidence.divisor_pair->first, v.evidence.divisor_pair->second};
    return j;
}

// Seeded spot checks of the transform identities on a few small fields.
json selftest(u64 seed, std::size_t& failures) {
    std::mt19937_64 rng(seed);
    const std::pair<u64, unsigned> fields[] = {{2, 4}, {3, 3}, {5, 2}, {7, 2}, {2, 6}};
    std::size_t cases = 0;
    failures = 0;
    for (auto [p, m] : fields) {
        auto ctx = gf::make_field(p, m);
        for (u64 N : divisors(ctx->order() - 1)) {
            const auto zeta = zfun::root_of_unity(ctx, N);
            for (int t = 0; t < 8; ++t) {
                std::vector<gf::Elem> a(N), b(N);
                std::uniform_int_distribution<gf::Elem> pick(0, static_cast<gf::Elem>(ctx->order() - 1));
                for (auto& x : a) x = pick(rng);
                for (auto& x : b) x = pick(rng);
                zfun::CyclicFn f(ctx, a), g(ctx, b);
                ++cases;
                if (zfun::idft(zfun::dft(f, zeta), zeta) != f) ++failures;
                ++cases;
                if (zfun::dft(zfun::convolve(f, g), zeta) != zfun::dft(f, zeta) * zfun::dft(g, zeta)) ++failures;
            }
        }
    }
    return {{"seed", seed}, {"cases", cases}, {"failures", failures}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-field period and prescribed-coefficient toolkit", "ffp"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    u64 seed = 0;
    u64 cap = 0;
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "write the result here instead of stdout");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--cap", cap, "size cap on q^n - 1");

    u64 q = 0, p = 0;
    unsigned n = 0, m = 1, w = 0;
    gf::Elem c = 0;
    std::vector<u64> seq, q_list;
    std::vector<gf::Elem> values, poly;
    std::string L = "auto";
    bool inverse = false, full = false, no_witness = false;
    unsigned n_min = 0, n_max = 0, threads = 1;
    std::optional<unsigned> only_w;
    std::optional<gf::Elem> only_c;

    auto* period = app.add_subcommand("period", "least period of a sequence or of Delta_{w,c}");
    period->add_option("--seq", seq, "comma-separated integer sequence")->delimiter(',');
    period->add_option("--q", q);
    period->add_option("--n", n);
    period->add_option("--w", w);
    period->add_option("--c", c);

    auto* dft = app.add_subcommand("dft", "DFT of a function Z_N -> F_{p^m}");
    dft->add_option("--p", p)->required();
    dft->add_option("--m", m);
    dft->add_option("--values", values, "element codes, N = count")->delimiter(',')->required();
    dft->add_flag("--inverse", inverse);

    auto* delta = app.add_subcommand("delta", "values of Delta_{w,c} over F_q");
    delta->add_option("--q", q)->required();
    delta->add_option("--n", n)->required();
    delta->add_option("--w", w)->required();
    delta->add_option("--c", c);

    auto* factor = app.add_subcommand("factor-test", "degree-n factor certificate from the period of S(x)");
    factor->add_option("--q", q)->required();
    factor->add_option("--n", n)->required();
    factor->add_option("--poly", poly, "F_q codes, constant term first")->delimiter(',')->required();
    factor->add_option("--L", L, "subfield order or 'auto'");

    auto* irred = app.add_subcommand("irred-test", "irreducibility certificate for a degree-n polynomial");
    irred->add_option("--q", q)->required();
    irred->add_option("--poly", poly, "F_q codes, constant term first")->delimiter(',')->required();
    irred->add_option("--L", L, "subfield order or 'auto'");

    auto* verify = app.add_subcommand("hm-verify", "period-bound and witness sweep");
    verify->add_option("--q", q_list, "field sizes")->delimiter(',')->required();
    verify->add_option("--n", n, "single degree");
    verify->add_option("--n-min", n_min);
    verify->add_option("--n-max", n_max);
    verify->add_option("--w", only_w);
    verify->add_option("--c", only_c);
    verify->add_flag("--full", full, "all w in [1, n]");
    verify->add_flag("--no-witness", no_witness);
    verify->add_option("--threads", threads);

    auto* witness = app.add_subcommand("witness", "monic irreducible of degree n with [x^{n-w}] = c");
    witness->add_option("--q", q)->required();
    witness->add_option("--n", n)->required();
    witness->add_option("--w", w)->required();
    witness->add_option("--c", c)->required();

    auto* self = app.add_subcommand("selftest", "seeded transform identity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const Format fmt = report::parse_format(format);
        const u64 size_cap = cap ? cap : hm::size_cap_from_env(symfun::kDefaultModulusCap);
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + out_path);
        }
        std::ostream& os = out_path.empty() ? out : file;

        if (*period) {
            if (!seq.empty()) {
                const u64 r = zfun::least_period_of<u64>(seq);
                emit(os, {{"length", seq.size()}, {"least_period", r}}, fmt);
                return kOk;
            }
            if (!q || !n || !w) throw Error(ErrorCode::InvalidArgument, "give --seq or --q, --n, --w [--c]");
            if (2 * w > n) {
                throw Error(ErrorCode::WOutOfRange, "period claims cover w <= n/2; use hm-verify --full");
            }
            const auto rep = hm::verify_period_claims(q, n, w, c, size_cap);
            emit(os, report::to_json(rep), fmt);
            return rep.outcome == hm::Outcome::Fail ? kClaimFailed : kOk;
        }
        if (*dft) {
            auto ctx = gf::make_field(p, m);
            zfun::CyclicFn f(ctx, values);
            const auto zeta = zfun::root_of_unity(ctx, f.modulus());
            const auto g = inverse ? zfun::idft(f, zeta) : zfun::dft(f, zeta);
            emit(os,
                 {{"field", ctx->describe()},
                  {"zeta", zeta.code()},
                  {"values", std::vector<gf::Elem>(g.values().begin(), g.values().end())}},
                 fmt);
            return kOk;
        }
        if (*delta) {
            symfun::cyclic_modulus(q, n, size_cap);
            const auto d = symfun::delta_wc(q, n, w, gf::FieldElement(base_field(q), c));
            emit(os,
                 {{"q", q},
                  {"n", n},
                  {"w", w},
                  {"c", c},
                  {"least_period", zfun::least_period(d)},
                  {"values", std::vector<gf::Elem>(d.values().begin(), d.values().end())}},
                 fmt);
            return kOk;
        }
        if (*factor || *irred) {
            symfun::cyclic_modulus(q, n ? n : 1, size_cap);
            gf::PolyFq h(base_field(q), poly);
            if (*irred) n = h.degree() < 0 ? 0 : static_cast<unsigned>(h.degree());
            symfun::cyclic_modulus(q, n, size_cap);
            const auto v = *irred ? spectral::irreducible_sufficient_test(h, q, n, parse_subfield(L))
                                  : spectral::degree_n_factor_test(h, q, n, parse_subfield(L));
            json j = verdict_json(v);
            j["poly"] = gf::to_string(h);
            int rc = kOk;
            if (*irred) {
                const bool irr = spectral::oracle_irreducible(h);
                j["oracle_irreducible"] = irr;
                if (v.proven() && !irr) rc = kClaimFailed;
            } else {
                const auto degs = spectral::oracle_factor_degrees(h);
                j["oracle_factor_degrees"] = degs;
                if (v.proven() && std::find(degs.begin(), degs.end(), n) == degs.end()) rc = kClaimFailed;
            }
            emit(os, j, fmt);
            return rc;
        }
        if (*verify) {
            hm::SweepConfig cfg;
            cfg.q_list = q_list;
            cfg.n_min = n ? n : n_min;
            cfg.n_max = n ? n : n_max;
            if (!cfg.n_min || !cfg.n_max) throw Error(ErrorCode::InvalidArgument, "give --n or --n-min/--n-max");
            cfg.w_policy = full || (only_w && 2 * *only_w > cfg.n_max) ? hm::WPolicy::Full : hm::WPolicy::Half;
            cfg.only_w = only_w;
            cfg.only_c = only_c;
            cfg.size_cap = size_cap;
            cfg.with_witness = !no_witness;
            cfg.threads = threads;
            const auto res = hm::sweep(cfg);
            report::write(os, res, fmt);
            return res.summary.fail ? kClaimFailed : kOk;
        }
        if (*witness) {
            symfun::cyclic_modulus(q, n, size_cap);
            const auto P = hm::hm_witness(q, n, w, c);
            const auto label = hm::classify(q, n, w, c);
            json j = {{"q", q}, {"n", n}, {"w", w}, {"c", c}, {"case_label", hm::to_string(label)}};
            j["witness"] = P ? json(gf::to_string(*P)) : json(nullptr);
            if (P) j["coefficients"] = report::poly_json(*P);
            emit(os, j, fmt);
            return P || label == hm::CaseLabel::Excluded ? kOk : kClaimFailed;
        }
        if (*self) {
            std::size_t failures = 0;
            emit(os, selftest(seed, failures), fmt);
            return failures ? kClaimFailed : kOk;
        }
    } catch (const Error& e) {
        err << "ffp: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "ffp: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ffp

// Copyright 2026 The GateForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gateforge/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "gateforge/evolution.hpp"
#include "gateforge/synthesis.hpp"

namespace gateforge {

std::string CouplingTerm::label() const {
    std::string out;
    for (const PauliString &s : strings) {
        if (!out.empty()) {
            out += '+';
        }
        out += s.letters();
    }
    return out;
}

std::size_t CouplingTerm::max_weight() const {
    std::size_t w = 0;
    for (const PauliString &s : strings) {
        w = std::max(w, s.weight());
    }
    return w;
}

void CouplingAnsatz::validate() const {
    if (terms.empty()) {
        throw std::invalid_argument("ansatz has no terms");
    }
    if (n_qubits == 0) {
        throw std::invalid_argument("ansatz needs at least one qubit");
    }
    if (bounds.size() != terms.size()) {
        throw std::invalid_argument("ansatz has " + std::to_string(terms.size()) + " terms but " +
                                    std::to_string(bounds.size()) + " bounds");
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].strings.empty()) {
            throw std::invalid_argument("ansatz term " + std::to_string(i) + " is empty");
        }
        for (const PauliString &s : terms[i].strings) {
            if (s.size() != n_qubits) {
                throw std::invalid_argument("string \"" + s.letters() + "\" does not act on " +
                                            std::to_string(n_qubits) + " qubits");
            }
        }
        if (two_spin_only && terms[i].max_weight() > 2) {
            throw std::invalid_argument("term \"" + terms[i].label() + "\" couples more than two spins");
        }
        const auto [lo, hi] = bounds[i];
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
            throw std::invalid_argument("bounds of term \"" + terms[i].label() + "\" are not a finite interval");
        }
    }
}

PauliPolynomial CouplingAnsatz::hamiltonian(std::span<const double> coeffs) const {
    if (coeffs.size() != terms.size()) {
        throw DimensionError("ansatz has " + std::to_string(terms.size()) + " terms but got " +
                             std::to_string(coeffs.size()) + " coefficients");
    }
    PauliPolynomial h(n_qubits);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (const PauliString &s : terms[i].strings) {
            h.add_term(s, coeffs[i]);
        }
    }
    return h;
}

CouplingAnsatz CouplingAnsatz::from_strings(std::size_t n_qubits, std::span<const PauliString> strings,
                                            double delta_t, double hbar) {
    CouplingAnsatz a;
    a.n_qubits = n_qubits;
    for (const PauliString &s : strings) {
        a.terms.push_back({{s}});
        a.bounds.push_back(default_coupling_bounds(delta_t, hbar));
    }
    return a;
}

std::pair<double, double> default_coupling_bounds(double delta_t, double hbar) {
    if (!(delta_t > 0.0) || !(hbar > 0.0)) {
        throw DomainError("delta_t and hbar must be positive");
    }
    const double b = 2.0 * kPi * hbar / delta_t;
    return {-b, b};
}

CouplingAnsatz xor_tensor_ansatz(double delta_t, double hbar) {
    return CouplingAnsatz::from_strings(3, xor_interaction_strings(), delta_t, hbar);
}

CouplingAnsatz not2_tensor_ansatz(double delta_t, double hbar) {
    const std::vector<PauliString> s{PauliString("XX"), PauliString("YY"), PauliString("XY"), PauliString("YX")};
    return CouplingAnsatz::from_strings(2, s, delta_t, hbar);
}

namespace {

PauliString two_site(std::size_t n, std::size_t i, char a, std::size_t j, char b) {
    std::string s(n, 'I');
    s[i] = a;
    s[j] = b;
    return PauliString(s);
}

CouplingAnsatz pair_ansatz(std::size_t n, std::string_view letters, bool with_fields, double delta_t,
                           double hbar) {
    if (n < 2) {
        throw std::invalid_argument("pair couplings need at least two qubits");
    }
    CouplingAnsatz a;
    a.n_qubits = n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            CouplingTerm t;
            for (char c : letters) {
                t.strings.push_back(two_site(n, i, c, j, c));
            }
            a.terms.push_back(std::move(t));
        }
    }
    if (with_fields) {
        for (std::size_t i = 0; i < n; ++i) {
            for (char c : {'X', 'Y', 'Z'}) {
                std::string s(n, 'I');
                s[i] = c;
                a.terms.push_back({{PauliString(s)}});
            }
        }
    }
    a.bounds.assign(a.terms.size(), default_coupling_bounds(delta_t, hbar));
    return a;
}

} // namespace

CouplingAnsatz ising_ansatz(std::size_t n, bool with_fields, double delta_t, double hbar) {
    return pair_ansatz(n, "Z", with_fields, delta_t, hbar);
}

CouplingAnsatz xy_ansatz(std::size_t n, bool with_fields, double delta_t, double hbar) {
    return pair_ansatz(n, "XY", with_fields, delta_t, hbar);
}

CouplingAnsatz heisenberg_ansatz(std::size_t n, bool with_fields, double delta_t, double hbar) {
    return pair_ansatz(n, "XYZ", with_fields, delta_t, hbar);
}

CouplingAnsatz ansatz_by_name(std::string_view name, std::size_t n, bool with_fields, double delta_t,
                              double hbar) {
    if (name == "xor-tensor") {
        return xor_tensor_ansatz(delta_t, hbar);
    }
    if (name == "not2-tensor") {
        return not2_tensor_ansatz(delta_t, hbar);
    }
    if (name == "ising") {
        return ising_ansatz(n, with_fields, delta_t, hbar);
    }
    if (name == "xy") {
        return xy_ansatz(n, with_fields, delta_t, hbar);
    }
    if (name == "heisenberg") {
        return heisenberg_ansatz(n, with_fields, delta_t, hbar);
    }
    throw std::invalid_argument("unknown ansatz \"" + std::string(name) + "\"");
}

void SearchConfig::validate() const {
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
    if (max_evaluations < 1) {
        throw std::invalid_argument("max_evaluations must be at least 1");
    }
    if (!(target_leakage >= 0.0) || !std::isfinite(target_leakage)) {
        throw std::invalid_argument("target_leakage must be a finite nonnegative number");
    }
    if (threads < 1) {
        throw std::invalid_argument("threads must be at least 1");
    }
}

std::string_view to_string(OptimizerKind k) { return k == OptimizerKind::simplex ? "simplex" : "random"; }

std::string_view to_string(SimplexMetric m) { return m == SimplexMetric::total ? "total" : "worst"; }

OptimizerKind optimizer_from_string(std::string_view s) {
    if (s == "simplex") {
        return OptimizerKind::simplex;
    }
    if (s == "random") {
        return OptimizerKind::random;
    }
    throw std::invalid_argument("unknown optimizer \"" + std::string(s) + "\"");
}

SimplexMetric metric_from_string(std::string_view s) {
    if (s == "total") {
        return SimplexMetric::total;
    }
    if (s == "worst") {
        return SimplexMetric::worst;
    }
    throw std::invalid_argument("unknown simplex metric \"" + std::string(s) + "\"");
}

namespace {

struct Score {
    double worst;
    double total;
};

class Evaluator {
  public:
    Evaluator(const CouplingAnsatz &ansatz, const GateSpec &spec, double delta_t, double hbar)
        : spec_(spec), scale_(delta_t / hbar) {
        if (ansatz.n_qubits != spec.n_qubits) {
            throw DimensionError("ansatz acts on " + std::to_string(ansatz.n_qubits) + " qubits but spec \"" +
                                 spec.name + "\" on " + std::to_string(spec.n_qubits));
        }
        if (!(delta_t > 0.0) || !(hbar > 0.0)) {
            throw DomainError("delta_t and hbar must be positive");
        }
        for (const CouplingTerm &t : ansatz.terms) {
            CMatrix m(spec.dim());
            for (const PauliString &s : t.strings) {
                m += string_matrix(s);
            }
            mats_.push_back(std::move(m));
        }
    }

    CMatrix unitary(std::span<const double> c) const {
        if (c.size() != mats_.size()) {
            throw DimensionError("ansatz has " + std::to_string(mats_.size()) + " terms but got " +
                                 std::to_string(c.size()) + " coefficients");
        }
        CMatrix h(spec_.dim());
        for (std::size_t i = 0; i < c.size(); ++i) {
            h += mats_[i] * Complex(c[i]);
        }
        return expm_hermitian(h, scale_);
    }

    Score score(std::span<const double> c) const {
        const CMatrix u = unitary(c);
        return {verify_gate(u, spec_).worst_leakage, pattern_leakage(u, spec_)};
    }

  private:
    const GateSpec &spec_;
    double scale_;
    std::vector<CMatrix> mats_;
};

struct RestartOutcome {
    RestartHistory history;
    std::vector<double> best_x;
};

// Budgeted evaluation with best-so-far bookkeeping.
class Tracker {
  public:
    Tracker(const Evaluator &ev, const SearchConfig &cfg, std::size_t restart)
        : ev_(ev), cfg_(cfg) {
        out_.history.restart = restart;
        out_.history.best_leakage = std::numeric_limits<double>::infinity();
        out_.history.evaluations = 0;
    }

    bool done() const {
        return out_.history.evaluations >= cfg_.max_evaluations ||
               out_.history.best_leakage <= cfg_.target_leakage;
    }

    // Value the optimizer ranks by.
    double eval(const std::vector<double> &x) {
        const Score s = ev_.score(x);
        ++out_.history.evaluations;
        if (s.worst < out_.history.best_leakage) {
            out_.history.best_leakage = s.worst;
            out_.best_x = x;
            out_.history.points.push_back({out_.history.evaluations, s.worst});
        }
        return cfg_.metric == SimplexMetric::total ? s.total : s.worst;
    }

    const std::vector<double> &best_x() const { return out_.best_x; }
    RestartOutcome take() { return std::move(out_); }

  private:
    const Evaluator &ev_;
    const SearchConfig &cfg_;
    RestartOutcome out_;
};

void clamp_into(std::vector<double> &x, const CouplingAnsatz &a) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], a.bounds[i].first, a.bounds[i].second);
    }
}

std::vector<double> uniform_point(const CouplingAnsatz &a, std::mt19937_64 &rng) {
    std::vector<double> x(a.terms.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::uniform_real_distribution<double>(a.bounds[i].first, a.bounds[i].second)(rng);
    }
    return x;
}

// Adaptive-parameter Nelder-Mead inside the bounding box.
void run_simplex(const CouplingAnsatz &a, Tracker &tr, std::mt19937_64 &rng) {
    const std::size_t n = a.terms.size();
    const double dn = static_cast<double>(n);
    const double refl = 1.0;
    const double expand = 1.0 + 2.0 / dn;
    const double contract = 0.75 - 1.0 / (2.0 * dn);
    const double shrink = 1.0 - 1.0 / dn;

    std::vector<double> width(n);
    for (std::size_t i = 0; i < n; ++i) {
        width[i] = a.bounds[i].second - a.bounds[i].first;
    }

    std::vector<std::vector<double>> xs;
    std::vector<double> fs;
    auto build = [&](const std::vector<double> &origin, double step) {
        xs.assign(1, origin);
        fs.assign(1, tr.eval(origin));
        for (std::size_t i = 0; i < n && !tr.done(); ++i) {
            std::vector<double> v = origin;
            v[i] += step * width[i];
            if (v[i] > a.bounds[i].second) {
                v[i] = origin[i] - step * width[i];
            }
            clamp_into(v, a);
            fs.push_back(tr.eval(v));
            xs.push_back(std::move(v));
        }
    };

    build(uniform_point(a, rng), 0.1);
    std::vector<std::size_t> order(n + 1);
    while (!tr.done()) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return fs[p] < fs[q]; });
        std::vector<std::vector<double>> sx(n + 1);
        std::vector<double> sf(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            sx[k] = std::move(xs[order[k]]);
            sf[k] = fs[order[k]];
        }
        xs = std::move(sx);
        fs = std::move(sf);

        double diameter = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                diameter = std::max(diameter, std::abs(xs[k][i] - xs[0][i]) / width[i]);
            }
        }
        if (diameter < 1e-10) {
            build(tr.best_x(), 0.05);
            continue;
        }

        std::vector<double> c(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                c[i] += xs[k][i] / dn;
            }
        }
        auto along = [&](double t) {
            std::vector<double> v(n);
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = c[i] + t * (xs[n][i] - c[i]);
            }
            clamp_into(v, a);
            return v;
        };

        std::vector<double> xr = along(-refl);
        const double fr = tr.eval(xr);
        if (fr < fs[0]) {
            if (tr.done()) {
                break;
            }
            std::vector<double> xe = along(-refl * expand);
            const double fe = tr.eval(xe);
            if (fe < fr) {
                xs[n] = std::move(xe);
                fs[n] = fe;
            } else {
                xs[n] = std::move(xr);
                fs[n] = fr;
            }
            continue;
        }
        if (fr < fs[n - 1]) {
            xs[n] = std::move(xr);
            fs[n] = fr;
            continue;
        }
        if (tr.done()) {
            break;
        }
        const bool outside = fr < fs[n];
        std::vector<double> xc = along(outside ? -refl * contract : contract);
        const double fc = tr.eval(xc);
        if (outside ? fc <= fr : fc < fs[n]) {
            xs[n] = std::move(xc);
            fs[n] = fc;
            continue;
        }
        for (std::size_t k = 1; k <= n && !tr.done(); ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                xs[k][i] = xs[0][i] + shrink * (xs[k][i] - xs[0][i]);
            }
            fs[k] = tr.eval(xs[k]);
        }
    }
}

// (1+1) random search with a success-adapted Gaussian step and occasional
// uniform jumps.
void run_random(const CouplingAnsatz &a, Tracker &tr, std::mt19937_64 &rng) {
    const std::size_t n = a.terms.size();
    std::vector<double> x = uniform_point(a, rng);
    double fx = tr.eval(x);
    double sigma = 0.1;
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (!tr.done()) {
        std::vector<double> y;
        if (unit(rng) < 0.1) {
            y = uniform_point(a, rng);
        } else {
            y = x;
            for (std::size_t i = 0; i < n; ++i) {
                y[i] += sigma * (a.bounds[i].second - a.bounds[i].first) * gauss(rng);
            }
            clamp_into(y, a);
        }
        const double fy = tr.eval(y);
        if (fy < fx) {
            x = std::move(y);
            fx = fy;
            sigma = std::min(0.5, sigma * 1.5);
        } else {
            sigma = std::max(1e-12, sigma * 0.95);
        }
    }
}

RestartOutcome run_restart(const CouplingAnsatz &a, const Evaluator &ev, const SearchConfig &cfg,
                           std::size_t restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    Tracker tr(ev, cfg, restart);
    if (cfg.optimizer == OptimizerKind::simplex) {
        run_simplex(a, tr, rng);
    } else {
        run_random(a, tr, rng);
    }
    return tr.take();
}

} // namespace

double objective(std::span<const double> coeffs, const CouplingAnsatz &ansatz, const GateSpec &spec,
                 double delta_t, double hbar) {
    const Evaluator ev(ansatz, spec, delta_t, hbar);
    return verify_gate(ev.unitary(coeffs), spec).worst_leakage;
}

SearchResult run_search(const CouplingAnsatz &ansatz, const GateSpec &spec, const SearchConfig &config,
                        double delta_t, double hbar) {
    ansatz.validate();
    config.validate();
    const Evaluator ev(ansatz, spec, delta_t, hbar);

    SearchResult result;
    result.best_leakage = std::numeric_limits<double>::infinity();
    std::size_t next = 0;
    while (next < config.restarts && !result.target_met) {
        const std::size_t wave = std::min(config.threads, config.restarts - next);
        std::vector<RestartOutcome> outs(wave);
        if (wave == 1) {
            outs[0] = run_restart(ansatz, ev, config, next);
        } else {
            std::vector<std::exception_ptr> errors(wave);
            {
                std::vector<std::jthread> pool;
                for (std::size_t w = 0; w < wave; ++w) {
                    pool.emplace_back([&, w] {
                        try {
                            outs[w] = run_restart(ansatz, ev, config, next + w);
                        } catch (...) {
                            errors[w] = std::current_exception();
                        }
                    });
                }
            }
            for (const std::exception_ptr &e : errors) {
                if (e) {
                    std::rethrow_exception(e);
                }
            }
        }
        for (RestartOutcome &o : outs) {
            if (result.target_met) {
                break;
            }
            result.evaluations_used += o.history.evaluations;
            if (o.history.best_leakage < result.best_leakage) {
                result.best_leakage = o.history.best_leakage;
                result.best_coefficients = o.best_x;
            }
            result.target_met = o.history.best_leakage <= config.target_leakage;
            result.history.push_back(std::move(o.history));
        }
        next += wave;
    }
    return result;
}

} // namespace gateforge

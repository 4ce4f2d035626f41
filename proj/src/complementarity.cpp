#include "cohdist/complementarity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

namespace cohdist {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

InequalityReport finish(double bound, std::vector<std::pair<std::string, double>> comps) {
    InequalityReport rep;
    rep.bound = bound;
    rep.components = std::move(comps);
    rep.lhs = 0.0;
    for (const auto& [name, v] : rep.components) rep.lhs += v;
    rep.residual = rep.bound - rep.lhs;
    rep.satisfied = rep.residual >= -1e-8;
    return rep;
}

}  // namespace

InequalityReport check_single(const DensityMatrix& rho, const KrausChannel& ch,
                              const Basis& basis) {
    if (rho.dim() != ch.dim_in || rho.dim() != basis.dim())
        throw std::invalid_argument("check_single: dimension mismatch");
    const double c = coherence_relative_entropy(rho.mat(), basis);
    const double d = disturbance(rho, ch);
    return finish(2.0 * std::log2(static_cast<double>(rho.dim())),
                  {{"2C_r", 2.0 * c}, {"D", d}});
}

InequalityReport check_measurement_channel(const DensityMatrix& rho, const KrausChannel& ch,
                                           const Basis& basis) {
    if (!ch.measurement_type)
        throw std::invalid_argument("check_measurement_channel: channel is not measurement-type");
    if (rho.dim() != ch.dim_in || rho.dim() != basis.dim())
        throw std::invalid_argument("check_measurement_channel: dimension mismatch");
    const double c = coherence_relative_entropy(rho.mat(), basis);
    const double d = disturbance(rho, ch);
    const int d_env = dilation_isometry(ch).dim_env;
    return finish(std::log2(static_cast<double>(d_env)), {{"C_r", c}, {"D", d}});
}

InequalityReport check_bipartite_entanglement(const DensityMatrix& rho_ab, int d_a, int d_b,
                                              const KrausChannel& ch, const Basis& basis,
                                              EntanglementMode mode) {
    if (rho_ab.dim() != d_a * d_b || basis.dim() != d_a * d_b)
        throw std::invalid_argument("check_bipartite_entanglement: dimension mismatch");
    const double c = coherence_relative_entropy(rho_ab.mat(), basis);
    const double e = mode == EntanglementMode::certified
                         ? er_upper_bound_product(rho_ab, d_a, d_b)
                         : relative_entropy_entanglement(rho_ab, d_a, d_b).value;
    const double d = disturbance_bipartite(rho_ab, d_a, d_b, ch);
    return finish(2.0 * std::log2(static_cast<double>(d_a * d_b)),
                  {{"C_r", c}, {"E", e}, {"D", d}});
}

InequalityReport check_bipartite_discord(const DensityMatrix& rho_ab, int d_a, int d_b,
                                         const KrausChannel& ch, const Basis& basis) {
    if (rho_ab.dim() != d_a * d_b || basis.dim() != d_a * d_b)
        throw std::invalid_argument("check_bipartite_discord: dimension mismatch");
    const double c = coherence_relative_entropy(rho_ab.mat(), basis);
    const double q = quantum_discord(rho_ab, d_a, d_b).value;
    const double d = disturbance_bipartite(rho_ab, d_a, d_b, ch);
    return finish(2.0 * std::log2(static_cast<double>(d_a * d_b)),
                  {{"C_r", c}, {"Q_D", q}, {"D", d}});
}

double coherence_closed_form(double l0, double l1) {
    const double c = l0 - l1;
    return 1.0 + plogp(0.5 * (1.0 + c)) + plogp(0.5 * (1.0 - c));
}

double disturbance_weak_closed_form(double l0, double l1, double x) {
    const double c = l0 - l1;
    const double mid = 0.5 * c * std::sqrt(std::max(0.0, 1.0 - x * x));
    const double g = std::sqrt(std::max(0.0, 1.0 - 4.0 * l0 * l1 * x * x));
    return -plogp(0.5 * (1.0 + c)) - plogp(0.5 * (1.0 - c)) + plogp(0.5 + mid) +
           plogp(0.5 - mid) - plogp(0.5 * (1.0 - g)) - plogp(0.5 * (1.0 + g));
}

double disturbance_depolarizing_closed_form(double l0, double l1, double p) {
    const double c = l0 - l1;
    const double mid = 0.5 * c * (1.0 - p);
    const double a = 1.0 - 0.5 * p;
    const double g = std::sqrt(std::max(0.0, a * a - 4.0 * l0 * l1 * (p - 0.75 * p * p)));
    return -plogp(0.5 * (1.0 + c)) - plogp(0.5 * (1.0 - c)) + plogp(0.5 + mid) +
           plogp(0.5 - mid) - plogp(0.5 * p * l0) - plogp(0.5 * p * l1) -
           plogp(0.5 * (a + g)) - plogp(0.5 * (a - g));
}

double disturbance_ad_closed_form(double l0, double l1, double q) {
    const double c = l0 - l1;
    const double g = std::sqrt(q * q + c * c * (1.0 - q));
    double v = -plogp(0.5 * (1.0 + c)) - plogp(0.5 * (1.0 - c)) - plogp(1.0 - q * l1) -
               plogp(q * l1) + plogp(0.5 * (1.0 - g));
    // published final term carries log2(1+g) without the 1/2 of its partner
    if (1.0 + g > 0.0) v += 0.5 * (1.0 + g) * std::log2(1.0 + g);
    return v;
}

double disturbance_ad_closed_form_corrected(double l0, double l1, double q) {
    const double c = l0 - l1;
    const double g = std::sqrt(q * q + c * c * (1.0 - q));
    return -plogp(0.5 * (1.0 + c)) - plogp(0.5 * (1.0 - c)) - plogp(1.0 - q * l1) -
           plogp(q * l1) + plogp(0.5 * (1.0 - g)) + plogp(0.5 * (1.0 + g));
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::single: return "single";
        case Relation::measurement: return "measurement";
        case Relation::bipartite_entanglement: return "bipartite-entanglement";
        case Relation::bipartite_discord: return "bipartite-discord";
    }
    return "?";
}

const char* family_name(StateFamily f) {
    switch (f) {
        case StateFamily::computational: return "computational";
        case StateFamily::plus_minus: return "plus-minus";
        case StateFamily::schmidt_family: return "schmidt-family";
    }
    return "?";
}

namespace {

Basis make_frame(const SweepConfig& cfg) {
    if (cfg.basis == StateFamily::plus_minus) {
        if (cfg.dim != 2)
            throw std::invalid_argument("sweep: plus-minus frame requires dim 2");
        Mat h(2, 2);
        const double s = 1.0 / std::sqrt(2.0);
        h << s, s, s, -s;
        return Basis(h);
    }
    return Basis::computational(cfg.dim);
}

DensityMatrix make_state(const SweepConfig& cfg, RngStream& rng) {
    if (cfg.basis == StateFamily::schmidt_family) {
        const double l0 = rng.uniform();
        if (cfg.relation == Relation::bipartite_entanglement ||
            cfg.relation == Relation::bipartite_discord)
            return DensityMatrix(schmidt_pair_state(l0, 1.0 - l0).density());
        return system_state_plus_minus_basis(l0, 1.0 - l0);
    }
    return random_mixed(cfg.dim, cfg.dim, rng);
}

std::function<KrausChannel(double)> channel_factory(const SweepConfig& cfg) {
    const std::string& name = cfg.channel;
    const int d = cfg.dim;
    const bool bipartite = cfg.relation == Relation::bipartite_entanglement ||
                           cfg.relation == Relation::bipartite_discord;
    if (bipartite) {
        if (name == "identity")
            return [d](double) { return unitary_channel(identity(d), "identity"); };
        if (name == "depolarizing-local")
            return [](double p) {
                KrausChannel ch = tensor_channel(depolarizing(p), depolarizing(p));
                ch.label = "depolarizing-local";
                ch.param = p;
                return ch;
            };
        if (name == "depolarizing-global")
            return [d](double p) {
                KrausChannel ch = depolarizing(p, d);
                ch.label = "depolarizing-global";
                return ch;
            };
        throw std::invalid_argument("sweep: unknown bipartite channel '" + name + "'");
    }
    if (name == "weak") {
        if (d != 2) throw std::invalid_argument("sweep: weak channel requires dim 2");
        return [](double x) { return weak_measurement(x); };
    }
    if (name == "projective")
        return [d](double) { return projective_measurement(Basis::computational(d)); };
    if (name == "depolarizing")
        return [d](double p) { return depolarizing(p, d); };
    if (d != 2)
        throw std::invalid_argument("sweep: channel '" + name + "' requires dim 2");
    if (name == "amplitude_damping") return [](double q) { return amplitude_damping(q); };
    if (name == "bit_flip") return [](double p) { return bit_flip(p); };
    if (name == "phase_flip") return [](double p) { return phase_flip(p); };
    if (name == "bit_phase_flip") return [](double p) { return bit_phase_flip(p); };
    throw std::invalid_argument("sweep: unknown channel '" + name + "'");
}

void validate(const SweepConfig& cfg) {
    if (cfg.param_steps < 1) throw std::invalid_argument("sweep: param_steps must be >= 1");
    if (cfg.samples < 1) throw std::invalid_argument("sweep: samples must be >= 1");
    switch (cfg.relation) {
        case Relation::single:
            if (cfg.dim != 2 && cfg.dim != 3)
                throw std::invalid_argument("sweep: single relation supports dim 2 or 3");
            break;
        case Relation::measurement:
            if (cfg.dim != 2)
                throw std::invalid_argument("sweep: measurement relation supports dim 2");
            break;
        case Relation::bipartite_entanglement:
        case Relation::bipartite_discord:
            if (cfg.dim != 4)
                throw std::invalid_argument("sweep: bipartite relations need dim 4 (= 2x2)");
            if (cfg.basis == StateFamily::plus_minus)
                throw std::invalid_argument("sweep: plus-minus frame is single-qubit only");
            break;
    }
}

}  // namespace

std::vector<SweepRecord> sweep(const SweepConfig& cfg) {
    validate(cfg);
    const Basis frame = make_frame(cfg);
    auto factory = channel_factory(cfg);

    std::vector<double> grid(cfg.param_steps);
    for (int i = 0; i < cfg.param_steps; ++i)
        grid[i] = cfg.param_steps == 1
                      ? cfg.param_start
                      : cfg.param_start +
                            i * (cfg.param_stop - cfg.param_start) / (cfg.param_steps - 1);

    std::vector<KrausChannel> channels;
    channels.reserve(grid.size());
    for (double p : grid) channels.push_back(factory(p));

    const long n_rec = cfg.samples * cfg.param_steps;
    std::vector<SweepRecord> records(static_cast<size_t>(n_rec));

    auto run_sample = [&](long s) {
        RngStream rng(cfg.seed, static_cast<std::uint64_t>(s));
        const DensityMatrix rho = make_state(cfg, rng);
        const double coh = coherence_relative_entropy(rho.mat(), frame);

        // channel-independent terms, computed once per state
        double extra = 0.0;
        const char* extra_key = nullptr;
        if (cfg.relation == Relation::bipartite_entanglement) {
            extra_key = "E";
            extra = cfg.er_mode == EntanglementMode::certified
                        ? er_upper_bound_product(rho, 2, 2)
                        : relative_entropy_entanglement(rho, 2, 2).value;
        } else if (cfg.relation == Relation::bipartite_discord) {
            extra_key = "Q_D";
            extra = quantum_discord(rho, 2, 2).value;
        }

        for (int i = 0; i < cfg.param_steps; ++i) {
            const KrausChannel& ch = channels[i];
            const double dist = disturbance(rho, ch);

            double k_coh = 2.0, bound = 2.0 * std::log2(static_cast<double>(cfg.dim));
            if (cfg.relation == Relation::measurement) {
                k_coh = 1.0;
                bound = std::log2(static_cast<double>(ch.kraus.size()));
            } else if (cfg.relation != Relation::single) {
                k_coh = 1.0;
            }
            const double lhs = k_coh * coh + dist + (extra_key ? extra : 0.0);

            SweepRecord& rec = records[static_cast<size_t>(s) * cfg.param_steps + i];
            rec.sample_id = s;
            rec.d = cfg.dim;
            rec.channel_label = ch.label;
            rec.channel_param = ch.label == "projective" ? grid[i] : ch.param;
            rec.coherence = coh;
            rec.disturbance = dist;
            rec.extra_terms = {{"bound", bound}, {"k", k_coh}};
            if (extra_key) rec.extra_terms.emplace_back(extra_key, extra);
            rec.residual = bound - lhs;
            rec.seed = cfg.seed;
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    long workers = cfg.threads > 0 ? cfg.threads : (hw ? static_cast<long>(hw) : 1);
    workers = std::min<long>(workers, cfg.samples);
    if (workers <= 1) {
        for (long s = 0; s < cfg.samples; ++s) run_sample(s);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(static_cast<size_t>(workers));
        for (long w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (long s = w; s < cfg.samples; s += workers) run_sample(s);
                } catch (...) {
                    errs[static_cast<size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errs)
            if (e) std::rethrow_exception(e);
    }

    // deterministic violation scan after the merge
    for (const SweepRecord& rec : records) {
        if (rec.residual >= -1e-8) continue;
        RngStream rng(cfg.seed, static_cast<std::uint64_t>(rec.sample_id));
        const DensityMatrix rho = make_state(cfg, rng);
        const long i = (&rec - records.data()) % cfg.param_steps;
        double bound = 0.0;
        for (const auto& [k, v] : rec.extra_terms)
            if (k == "bound") bound = v;
        throw CounterexampleError(
            "sweep: inequality violated at sample " + std::to_string(rec.sample_id) +
                ", param " + std::to_string(rec.channel_param),
            rec, rho.mat(), channels[static_cast<size_t>(i)], cfg.relation, bound - rec.residual,
            bound);
    }
    return records;
}

}  // namespace cohdist

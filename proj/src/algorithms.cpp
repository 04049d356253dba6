#include "sdfea/algorithms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "sdfea/combinatorics.hpp"

namespace sdfea {

void SdFeaParams::validate() const {
    if (!(beta > 1.0)) throw std::invalid_argument("sd-fea: beta must be > 1");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("sd-fea: gamma must be in [0, 1)");
    if (!(R > 1.0)) throw std::invalid_argument("sd-fea: R must be > 1");
}

namespace {

// Smallest integer count satisfying u >= limit; saturates when the phase
// length exceeds any reachable counter value.
std::uint64_t ceil_to_counter(long double limit) {
    constexpr long double kMax = 9e18L;
    if (limit >= kMax) return ~std::uint64_t{0};
    if (limit <= 0.0L) return 0;
    return static_cast<std::uint64_t>(std::ceil(limit));
}

}  // namespace

// ---------------------------------------------------------------- SD-FEA

SdFea::SdFea(const FitnessFunction& f, const SdFeaParams& params)
    : n_(f.n()), rmax_(max_strength(f.n())), opt_(f.optimum_value()), p_(params),
      ell_(static_cast<std::size_t>(rmax_) + 1, -1.0L),
      ell_ceil_(static_cast<std::size_t>(rmax_) + 1, 0),
      up_(static_cast<std::size_t>(rmax_) + 1),
      down_(static_cast<std::size_t>(rmax_) + 1),
      subset_(f.n()), y_(f.n()) {
    p_.validate();
    st_.x = BitString(n_);
}

void SdFea::reset(BitString x, double fx) {
    st_.x = std::move(x);
    st_.fx = fx;
    st_.r = 1;
    st_.u = 0;
    hit_ = false;
}

long double SdFea::phase_limit(int r) {
    auto& e = ell_[static_cast<std::size_t>(r)];
    if (e < 0.0L) e = phase_length(n_, r, p_.gamma, p_.R);
    return e;
}

std::uint64_t SdFea::phase_threshold(int r) {
    auto& c = ell_ceil_[static_cast<std::size_t>(r)];
    if (c == 0) c = ceil_to_counter(phase_limit(r));
    return c;
}

const PowerLawDist& SdFea::up_dist(int r) {
    auto& d = up_[static_cast<std::size_t>(r)];
    if (!d) d = std::make_unique<PowerLawDist>(p_.beta, n_ - r);
    return *d;
}

const PowerLawDist& SdFea::down_dist(int r) {
    auto& d = down_[static_cast<std::size_t>(r)];
    if (!d) d = std::make_unique<PowerLawDist>(p_.beta, std::max(1, r - 1));
    return *d;
}

void SdFea::step(CountedFitness& f, RandomSource& rng) {
    const int r = st_.r;
    const int s = sample_strength_from(r, p_.gamma, down_dist(r),
                                       n_ - r >= 1 ? &up_dist(r) : nullptr, rng);
    last_s_ = s;

    if (s > 1) {
        subset_.sample(s, rng, pos_);
        y_ = st_.x;
        for (const int p : pos_) y_.flip(p);
    } else {
        y_ = st_.x;
        if (s == 1) y_.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(n_))));
    }

    const double fy = f.evaluate(y_);
    if (fy == opt_) hit_ = true;

    st_.u += 1;
    if (fy > st_.fx) {
        std::swap(st_.x, y_);
        st_.fx = fy;
        st_.r = 1;
        st_.u = 0;
    } else {
        if (fy == st_.fx && r == 1) std::swap(st_.x, y_);
        if (st_.u >= phase_threshold(r)) {
            st_.r = std::min(r + 1, rmax_);
            st_.u = 0;
        }
    }
}

void sd_fea_step(SdFeaState& state, CountedFitness& f, const SdFeaParams& params,
                 RandomSource& rng) {
    SdFea alg(f.inner(), params);
    alg.state() = std::move(state);
    alg.step(f, rng);
    state = std::move(alg.state());
}

// ----------------------------------------------------------- comparators

CachedBinomial::CachedBinomial(int n, double p) : n_(n) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("CachedBinomial: p must be in [0, 1]");
    cdf_.resize(static_cast<std::size_t>(n) + 1);
    const long double lp = p;
    const long double lq = 1.0L - lp;
    long double pmf = std::pow(lq, static_cast<long double>(n));
    long double acc = pmf;
    cdf_[0] = static_cast<double>(acc);
    for (int k = 1; k <= n; ++k) {
        pmf *= lq > 0.0L ? lp / lq * static_cast<long double>(n - k + 1) /
                               static_cast<long double>(k)
                         : 0.0L;
        acc += pmf;
        cdf_[static_cast<std::size_t>(k)] = static_cast<double>(acc);
    }
    if (lq == 0.0L) {
        // p = 1: all mass on k = n
        for (int k = 0; k < n; ++k) cdf_[static_cast<std::size_t>(k)] = 0.0;
    }
    cdf_[static_cast<std::size_t>(n)] = 1.0;
}

Rls::Rls(const FitnessFunction& f)
    : n_(f.n()), opt_(f.optimum_value()), x_(f.n()), y_(f.n()) {}

void Rls::reset(BitString x, double fx) {
    x_ = std::move(x);
    fx_ = fx;
    hit_ = false;
}

void Rls::step(CountedFitness& f, RandomSource& rng) {
    y_ = x_;
    y_.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(n_))));
    const double fy = f.evaluate(y_);
    if (fy == opt_) hit_ = true;
    if (fy >= fx_) {
        std::swap(x_, y_);
        fx_ = fy;
    }
}

OnePlusOneEa::OnePlusOneEa(const FitnessFunction& f)
    : n_(f.n()), opt_(f.optimum_value()), flips_(f.n(), 1.0 / f.n()),
      subset_(f.n()), x_(f.n()), y_(f.n()) {}

void OnePlusOneEa::reset(BitString x, double fx) {
    x_ = std::move(x);
    fx_ = fx;
    hit_ = false;
}

void OnePlusOneEa::step(CountedFitness& f, RandomSource& rng) {
    const int s = flips_.sample(rng);
    last_s_ = s;
    if (s > 1) {
        subset_.sample(s, rng, pos_);
        y_ = x_;
        for (const int p : pos_) y_.flip(p);
    } else {
        y_ = x_;
        if (s == 1) y_.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(n_))));
    }
    const double fy = f.evaluate(y_);
    if (fy == opt_) hit_ = true;
    if (fy >= fx_) {
        std::swap(x_, y_);
        fx_ = fy;
    }
}

FastEa::FastEa(const FitnessFunction& f, double beta, int rate_cap)
    : n_(f.n()), opt_(f.optimum_value()), rate_(beta, rate_cap),
      flips_(static_cast<std::size_t>(rate_cap) + 1), subset_(f.n()),
      x_(f.n()), y_(f.n()) {
    if (rate_cap < 1 || rate_cap > std::max(1, f.n() / 2))
        throw std::invalid_argument("fea: rate_cap must be in [1, max(1, n/2)]");
}

void FastEa::reset(BitString x, double fx) {
    x_ = std::move(x);
    fx_ = fx;
    hit_ = false;
}

void FastEa::step(CountedFitness& f, RandomSource& rng) {
    const int alpha = rate_.sample(rng);
    auto& bin = flips_[static_cast<std::size_t>(alpha)];
    if (!bin) bin = std::make_unique<CachedBinomial>(n_, static_cast<double>(alpha) / n_);
    const int s = bin->sample(rng);
    last_s_ = s;
    if (s > 1) {
        subset_.sample(s, rng, pos_);
        y_ = x_;
        for (const int p : pos_) y_.flip(p);
    } else {
        y_ = x_;
        if (s == 1) y_.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(n_))));
    }
    const double fy = f.evaluate(y_);
    if (fy == opt_) hit_ = true;
    if (fy >= fx_) {
        std::swap(x_, y_);
        fx_ = fy;
    }
}

SdOnePlusOneEa::SdOnePlusOneEa(const FitnessFunction& f, double R, int rate_cap)
    : n_(f.n()), cap_(rate_cap), opt_(f.optimum_value()), R_(R),
      ell_(static_cast<std::size_t>(rate_cap) + 1, -1.0L),
      ell_ceil_(static_cast<std::size_t>(rate_cap) + 1, 0),
      flips_(static_cast<std::size_t>(rate_cap) + 1), subset_(f.n()),
      x_(f.n()), y_(f.n()) {
    if (!(R > 1.0)) throw std::invalid_argument("sd-oea: R must be > 1");
    if (rate_cap < 1 || rate_cap > std::max(1, f.n() / 2))
        throw std::invalid_argument("sd-oea: rate_cap must be in [1, max(1, n/2)]");
}

void SdOnePlusOneEa::reset(BitString x, double fx) {
    x_ = std::move(x);
    fx_ = fx;
    r_ = 1;
    u_ = 0;
    hit_ = false;
}

long double SdOnePlusOneEa::phase_limit(int r) {
    auto& e = ell_[static_cast<std::size_t>(r)];
    if (e < 0.0L) {
        // 2 (e n / r)^r ln(n R)
        const long double en_r = 1.0L + std::log(static_cast<long double>(n_) / r);
        e = 2.0L * std::exp(static_cast<long double>(r) * en_r) *
            std::log(static_cast<long double>(n_) * static_cast<long double>(R_));
    }
    return e;
}

std::uint64_t SdOnePlusOneEa::phase_threshold(int r) {
    auto& c = ell_ceil_[static_cast<std::size_t>(r)];
    if (c == 0) c = ceil_to_counter(phase_limit(r));
    return c;
}

const CachedBinomial& SdOnePlusOneEa::flips(int r) {
    auto& bin = flips_[static_cast<std::size_t>(r)];
    if (!bin) bin = std::make_unique<CachedBinomial>(n_, static_cast<double>(r) / n_);
    return *bin;
}

void SdOnePlusOneEa::step(CountedFitness& f, RandomSource& rng) {
    const int r = r_;
    const int s = flips(r).sample(rng);
    last_s_ = s;
    if (s > 1) {
        subset_.sample(s, rng, pos_);
        y_ = x_;
        for (const int p : pos_) y_.flip(p);
    } else {
        y_ = x_;
        if (s == 1) y_.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(n_))));
    }
    const double fy = f.evaluate(y_);
    if (fy == opt_) hit_ = true;

    u_ += 1;
    if (fy > fx_) {
        std::swap(x_, y_);
        fx_ = fy;
        r_ = 1;
        u_ = 0;
    } else {
        if (fy == fx_ && r == 1) std::swap(x_, y_);
        if (u_ >= phase_threshold(r)) {
            r_ = std::min(r + 1, cap_);
            u_ = 0;
        }
    }
}

SdRlsR::SdRlsR(const FitnessFunction& f, double R)
    : n_(f.n()), rmax_(max_strength(f.n())), opt_(f.optimum_value()), R_(R),
      ell_(static_cast<std::size_t>(rmax_) + 1, -1.0L),
      ell_ceil_(static_cast<std::size_t>(rmax_) + 1, 0), subset_(f.n()),
      x_(f.n()), y_(f.n()) {
    if (!(R > 1.0)) throw std::invalid_argument("sd-rls-r: R must be > 1");
}

void SdRlsR::reset(BitString x, double fx) {
    x_ = std::move(x);
    fx_ = fx;
    radius_ = 1;
    s_ = 1;
    u_ = 0;
    hit_ = false;
}

long double SdRlsR::strength_limit(int s) {
    auto& e = ell_[static_cast<std::size_t>(s)];
    if (e < 0.0L)
        e = std::exp(log_binomial_ld(n_, s)) * std::log(static_cast<long double>(R_));
    return e;
}

std::uint64_t SdRlsR::strength_threshold(int s) {
    auto& c = ell_ceil_[static_cast<std::size_t>(s)];
    if (c == 0) c = ceil_to_counter(strength_limit(s));
    return c;
}

void SdRlsR::step(CountedFitness& f, RandomSource& rng) {
    const int s = s_;
    last_s_ = s;
    if (s > 1) {
        subset_.sample(s, rng, pos_);
        y_ = x_;
        for (const int p : pos_) y_.flip(p);
    } else {
        y_ = x_;
        y_.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(n_))));
    }
    const double fy = f.evaluate(y_);
    if (fy == opt_) hit_ = true;

    u_ += 1;
    if (fy > fx_) {
        std::swap(x_, y_);
        fx_ = fy;
        radius_ = 1;
        s_ = 1;
        u_ = 0;
    } else {
        if (fy == fx_ && s == 1) std::swap(x_, y_);
        if (u_ >= strength_threshold(s)) {
            u_ = 0;
            if (s_ > 1) {
                s_ -= 1;
            } else {
                radius_ = std::min(radius_ + 1, rmax_);
                s_ = radius_;
            }
        }
    }
}

// ------------------------------------------------------------- run loop

namespace {

std::string format_number(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

const char* const kKnownNames[] = {"sd-fea", "rls", "oea", "fea", "sd-oea", "sd-rls-r"};

bool known_name(const std::string& name) {
    for (const auto* k : kKnownNames)
        if (name == k) return true;
    return false;
}

void reject(const std::string& name, const char* what, bool present) {
    if (present)
        throw std::invalid_argument("algorithm '" + name + "' does not take parameter '" +
                                    what + "'");
}

template <class Alg>
RunOutcome drive(Alg& alg, const FitnessFunction& f, std::uint64_t budget,
                 RandomSource& rng, const RunOptions& opts) {
    CountedFitness counted(f);
    BitString x = opts.initial ? *opts.initial : BitString::random(f.n(), rng);
    if (x.size() != f.n())
        throw std::invalid_argument("run_optimizer: initial point has wrong length");

    const double fx = counted.evaluate(x);
    RunOutcome out;
    if (f.is_optimum(x)) {
        out.evaluations = counted.count();
        out.success = true;
        return out;
    }
    if (opts.collect_trace)
        out.phase_iterations.assign(static_cast<std::size_t>(max_strength(f.n())) + 1, 0);

    alg.reset(std::move(x), fx);
    while (counted.count() < budget) {
        const int ph = alg.phase();
        alg.step(counted, rng);
        if (opts.collect_trace) {
            auto& t = out.phase_iterations;
            if (static_cast<std::size_t>(ph) >= t.size())
                t.resize(static_cast<std::size_t>(ph) + 1, 0);
            t[static_cast<std::size_t>(ph)] += 1;
        }
        if (alg.hit_optimum()) {
            out.evaluations = counted.count();
            out.success = true;
            return out;
        }
    }
    out.evaluations = budget;
    out.success = false;
    return out;
}

}  // namespace

void AlgorithmSpec::validate(int n) const {
    if (!known_name(name))
        throw std::invalid_argument("unknown algorithm '" + name + "'");
    if (name == "sd-fea") {
        reject(name, "rate_cap", rate_cap.has_value());
        SdFeaParams p{beta.value_or(1.5), gamma.value_or(0.25), R.value_or(25.0)};
        p.validate();
    } else if (name == "rls" || name == "oea") {
        reject(name, "beta", beta.has_value());
        reject(name, "gamma", gamma.has_value());
        reject(name, "R", R.has_value());
        reject(name, "rate_cap", rate_cap.has_value());
    } else if (name == "fea") {
        reject(name, "gamma", gamma.has_value());
        reject(name, "R", R.has_value());
        if (!(beta.value_or(1.5) > 1.0))
            throw std::invalid_argument("fea: beta must be > 1");
        const int cap = resolved_rate_cap(n);
        if (cap < 1 || cap > std::max(1, n / 2))
            throw std::invalid_argument("fea: rate_cap must be in [1, max(1, n/2)]");
    } else if (name == "sd-oea") {
        reject(name, "beta", beta.has_value());
        reject(name, "gamma", gamma.has_value());
        if (!(resolved_R(n) > 1.0)) throw std::invalid_argument("sd-oea: R must be > 1");
        const int cap = resolved_rate_cap(n);
        if (cap < 1 || cap > std::max(1, n / 2))
            throw std::invalid_argument("sd-oea: rate_cap must be in [1, max(1, n/2)]");
    } else if (name == "sd-rls-r") {
        reject(name, "beta", beta.has_value());
        reject(name, "gamma", gamma.has_value());
        reject(name, "rate_cap", rate_cap.has_value());
        if (!(resolved_R(n) > 1.0)) throw std::invalid_argument("sd-rls-r: R must be > 1");
    }
}

double AlgorithmSpec::resolved_R(int n) const {
    if (R) return *R;
    if (name == "sd-fea") return 25.0;
    return static_cast<double>(n) * static_cast<double>(n);
}

int AlgorithmSpec::resolved_rate_cap(int n) const {
    if (rate_cap) return *rate_cap;
    return std::max(1, n / 2);
}

std::string AlgorithmSpec::label() const {
    std::string s = name;
    if (name == "sd-fea") {
        s += "_b" + format_number(beta.value_or(1.5));
        s += "_g" + format_number(gamma.value_or(0.25));
        s += "_R" + format_number(R.value_or(25.0));
    } else if (name == "fea") {
        s += "_b" + format_number(beta.value_or(1.5));
        if (rate_cap) s += "_c" + std::to_string(*rate_cap);
    } else if (name == "sd-oea" || name == "sd-rls-r") {
        if (R) s += "_R" + format_number(*R);
        if (rate_cap) s += "_c" + std::to_string(*rate_cap);
    }
    return s;
}

RunOutcome run_optimizer(const AlgorithmSpec& spec, const FitnessFunction& f,
                         std::uint64_t budget, std::uint64_t seed,
                         const RunOptions& opts) {
    if (budget < 1) throw std::invalid_argument("run_optimizer: budget must be >= 1");
    spec.validate(f.n());
    RandomSource rng(seed);
    const int n = f.n();

    if (spec.name == "sd-fea") {
        SdFea alg(f, {spec.beta.value_or(1.5), spec.gamma.value_or(0.25),
                      spec.R.value_or(25.0)});
        return drive(alg, f, budget, rng, opts);
    }
    if (spec.name == "rls") {
        Rls alg(f);
        return drive(alg, f, budget, rng, opts);
    }
    if (spec.name == "oea") {
        OnePlusOneEa alg(f);
        return drive(alg, f, budget, rng, opts);
    }
    if (spec.name == "fea") {
        FastEa alg(f, spec.beta.value_or(1.5), spec.resolved_rate_cap(n));
        return drive(alg, f, budget, rng, opts);
    }
    if (spec.name == "sd-oea") {
        SdOnePlusOneEa alg(f, spec.resolved_R(n), spec.resolved_rate_cap(n));
        return drive(alg, f, budget, rng, opts);
    }
    SdRlsR alg(f, spec.resolved_R(n));
    return drive(alg, f, budget, rng, opts);
}

}  // namespace sdfea

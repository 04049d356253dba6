#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "sdfea/bitstring.hpp"

namespace sdfea {

// Pseudo-Boolean maximization target. Evaluation is deterministic and
// pure; objects are immutable and shareable across threads.
class FitnessFunction {
public:
    virtual ~FitnessFunction() = default;

    virtual double evaluate(const BitString& x) const = 0;
    virtual bool is_optimum(const BitString& x) const = 0;
    virtual double optimum_value() const = 0;
    virtual int n() const = 0;
    virtual std::string name() const = 0;
    // Key/value parameter list for reporting, e.g. "delta=4;k=6".
    virtual std::string params() const { return {}; }
};

class OneMax final : public FitnessFunction {
public:
    explicit OneMax(int n);
    double evaluate(const BitString& x) const override {
        return static_cast<double>(x.ones_count());
    }
    bool is_optimum(const BitString& x) const override { return x.ones_count() == n_; }
    double optimum_value() const override { return static_cast<double>(n_); }
    int n() const override { return n_; }
    std::string name() const override { return "onemax"; }

private:
    int n_;
};

class LeadingOnes final : public FitnessFunction {
public:
    explicit LeadingOnes(int n);
    double evaluate(const BitString& x) const override {
        return static_cast<double>(x.leading_ones());
    }
    bool is_optimum(const BitString& x) const override { return x.leading_ones() == n_; }
    double optimum_value() const override { return static_cast<double>(n_); }
    int n() const override { return n_; }
    std::string name() const override { return "leadingones"; }

private:
    int n_;
};

// Jump with the valley of width delta starting at distance k from the
// all-ones optimum: fitness is the ones count on
// [0..n-k] and [n-k+delta..n], and its negation in between. k = delta
// recovers the classic jump function.
class JumpKDelta final : public FitnessFunction {
public:
    JumpKDelta(int n, int k, int delta);
    double evaluate(const BitString& x) const override {
        const int ones = x.ones_count();
        if (ones <= n_ - k_ || ones >= n_ - k_ + delta_) return static_cast<double>(ones);
        return static_cast<double>(-ones);
    }
    bool is_optimum(const BitString& x) const override { return x.ones_count() == n_; }
    double optimum_value() const override { return static_cast<double>(n_); }
    int n() const override { return n_; }
    std::string name() const override { return "jump"; }
    std::string params() const override;
    int k() const { return k_; }
    int delta() const { return delta_; }

private:
    int n_, k_, delta_;
};

// Factory used by the experiment configuration; throws on unknown names
// or missing/extraneous parameters.
std::unique_ptr<FitnessFunction> make_fitness(const std::string& name, int n,
                                              const std::map<std::string, int>& params);

// Per-run evaluation counter. Algorithms call evaluate() only through
// this wrapper, so the count read at the instant the optimum is first
// evaluated is the runtime of the run.
class CountedFitness {
public:
    explicit CountedFitness(const FitnessFunction& f) : f_(&f) {}

    double evaluate(const BitString& x) {
        ++count_;
        return f_->evaluate(x);
    }
    std::uint64_t count() const noexcept { return count_; }
    const FitnessFunction& inner() const noexcept { return *f_; }

private:
    const FitnessFunction* f_;
    std::uint64_t count_ = 0;
};

}  // namespace sdfea

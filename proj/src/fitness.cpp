#include "sdfea/fitness.hpp"

#include <stdexcept>

namespace sdfea {

namespace {

int checked_size(int n) {
    if (n < 1) throw std::invalid_argument("fitness: n must be >= 1");
    return n;
}

}  // namespace

OneMax::OneMax(int n) : n_(checked_size(n)) {}

LeadingOnes::LeadingOnes(int n) : n_(checked_size(n)) {}

JumpKDelta::JumpKDelta(int n, int k, int delta)
    : n_(checked_size(n)), k_(k), delta_(delta) {
    if (!(1 <= delta && delta <= k && k <= n))
        throw std::invalid_argument("jump: need 1 <= delta <= k <= n");
}

std::string JumpKDelta::params() const {
    return "k=" + std::to_string(k_) + ";delta=" + std::to_string(delta_);
}

std::unique_ptr<FitnessFunction> make_fitness(const std::string& name, int n,
                                              const std::map<std::string, int>& params) {
    auto require_none = [&] {
        if (!params.empty())
            throw std::invalid_argument("fitness '" + name + "' takes no parameters");
    };
    if (name == "onemax") {
        require_none();
        return std::make_unique<OneMax>(n);
    }
    if (name == "leadingones") {
        require_none();
        return std::make_unique<LeadingOnes>(n);
    }
    if (name == "jump") {
        auto it_k = params.find("k");
        auto it_d = params.find("delta");
        if (it_k == params.end() || it_d == params.end() || params.size() != 2)
            throw std::invalid_argument("fitness 'jump' needs exactly k and delta");
        return std::make_unique<JumpKDelta>(n, it_k->second, it_d->second);
    }
    throw std::invalid_argument("unknown fitness function '" + name + "'");
}

}  // namespace sdfea

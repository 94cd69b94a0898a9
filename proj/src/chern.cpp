#include "qtcob/chern.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtcob {

namespace {

// Deterministic generic points: coordinates drawn from the prime sequence,
// one fresh block per attempt. Exact rational arithmetic throughout.
long long nth_prime(int k) {
    static std::vector<long long> primes = {2, 3};
    while (static_cast<int>(primes.size()) <= k) {
        long long candidate = primes.back() + 2;
        for (;; candidate += 2) {
            bool prime = true;
            for (long long p : primes) {
                if (p * p > candidate) break;
                if (candidate % p == 0) { prime = false; break; }
            }
            if (prime) break;
        }
        primes.push_back(candidate);
    }
    return primes[static_cast<std::size_t>(k)];
}

std::vector<long long> evaluation_point(int n, int attempt) {
    std::vector<long long> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = nth_prime(attempt * n + i);
    return t;
}

Int form_value(const IntVec& w, const std::vector<long long>& t) {
    Int acc = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i) acc += w(i) * t[static_cast<std::size_t>(i)];
    return acc;
}

// Elementary symmetric polynomials e_0..e_n of the given values.
std::vector<Int> elementary_symmetric(const std::vector<Int>& values) {
    std::vector<Int> e(values.size() + 1, Int(0));
    e[0] = 1;
    for (const Int& x : values) {
        for (std::size_t k = values.size(); k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e;
}

// Signed localization sum at one point; degenerate when a weight form
// vanishes there.
std::optional<Rat> localized_sum(const std::vector<VertexWeights>& system,
                                 const Partition& omega, const std::vector<long long>& t) {
    Rat total = 0;
    for (const VertexWeights& vw : system) {
        std::vector<Int> forms;
        forms.reserve(vw.weights.size());
        Int denom = 1;
        for (const IntVec& w : vw.weights) {
            Int value = form_value(w, t);
            if (value == 0) return std::nullopt;
            denom *= value;
            forms.push_back(std::move(value));
        }
        const std::vector<Int> e = elementary_symmetric(forms);
        Int numer = vw.sign;
        for (int part : omega.parts()) numer *= e[static_cast<std::size_t>(part)];
        total += Rat(numer) / Rat(denom);
    }
    return total;
}

bool degenerate_anywhere(const std::vector<std::vector<VertexWeights>>& systems,
                         const std::vector<long long>& t) {
    for (const auto& system : systems) {
        for (const VertexWeights& vw : system) {
            for (const IntVec& w : vw.weights) {
                if (form_value(w, t) == 0) return true;
            }
        }
    }
    return false;
}

// First two points of the deterministic sequence at which no weight form of
// any listed system vanishes.
std::vector<std::vector<long long>> pick_points(
    const std::vector<std::vector<VertexWeights>>& systems, int n) {
    std::vector<std::vector<long long>> points;
    for (int attempt = 0; static_cast<int>(points.size()) < 2; ++attempt) {
        if (attempt > 1024)
            throw std::runtime_error("chern: could not find generic evaluation points");
        std::vector<long long> t = evaluation_point(n, attempt);
        if (!degenerate_anywhere(systems, t)) points.push_back(std::move(t));
    }
    return points;
}

Int integral_value(const Rat& sum) {
    if (boost::multiprecision::denominator(sum) != 1)
        throw std::runtime_error("chern: localization sum is not an integer");
    return Int(boost::multiprecision::numerator(sum));
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Partition: needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {
void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

VertexWeights tangent_weights(const OmniorientedModel& m, int v) {
    const IntMat labels = m.vertex_label_matrix(v);
    const Int d = det(labels);
    if (d != 1 && d != -1)
        throw std::invalid_argument("tangent_weights: model is not smooth at the vertex");
    // Dual basis to the facet labels: columns of (labels^-1)^T.
    const IntMat dual = inverse_transpose_unimodular(labels);
    VertexWeights vw;
    vw.weights.reserve(static_cast<std::size_t>(dual.cols()));
    for (Eigen::Index j = 0; j < dual.cols(); ++j) vw.weights.push_back(dual.col(j));
    vw.sign = vertex_sign(m, v);
    return vw;
}

std::vector<VertexWeights> weight_system(const OmniorientedModel& m) {
    std::vector<VertexWeights> system;
    system.reserve(static_cast<std::size_t>(m.polytope().vertex_count()));
    for (int v = 0; v < m.polytope().vertex_count(); ++v)
        system.push_back(tangent_weights(m, v));
    return system;
}

ChernEvaluation chern_number_detail(const OmniorientedModel& m, const Partition& omega) {
    if (omega.sum() != m.polytope().dim())
        throw std::invalid_argument("chern_number: partition must sum to the model dimension");
    const std::vector<VertexWeights> system = weight_system(m);
    const auto points = pick_points({system}, m.polytope().dim());
    const Rat first = *localized_sum(system, omega, points[0]);
    const Rat second = *localized_sum(system, omega, points[1]);
    if (first != second)
        throw std::runtime_error("chern: evaluations at two generic points disagree");
    return ChernEvaluation{integral_value(first), points};
}

Int chern_number(const OmniorientedModel& m, const Partition& omega) {
    return chern_number_detail(m, omega).value;
}

RelationVerification verify_relation(const CobordismRelation& r) {
    if (r.components.empty())
        throw std::invalid_argument("verify_relation: empty relation");
    const int n = r.components.front().model.polytope().dim();
    for (const RelationComponent& c : r.components) {
        if (c.model.polytope().dim() != n)
            throw std::invalid_argument("verify_relation: components of mixed dimension");
    }

    RelationVerification out;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        if (!is_smooth(r.components[i].model.model()))
            out.non_smooth_components.push_back(static_cast<int>(i));
    }
    if (!out.non_smooth_components.empty()) {
        out.status = RelationVerification::Status::unverifiable;
        return out;
    }

    std::vector<std::vector<VertexWeights>> systems;
    systems.reserve(r.components.size());
    for (const RelationComponent& c : r.components) systems.push_back(weight_system(c.model));

    out.points = pick_points(systems, n);
    bool all_zero = true;
    for (const Partition& omega : partitions_of(n)) {
        PartitionSum ps{omega, Int(0), {}};
        for (std::size_t i = 0; i < r.components.size(); ++i) {
            const Rat first = *localized_sum(systems[i], omega, out.points[0]);
            const Rat second = *localized_sum(systems[i], omega, out.points[1]);
            if (first != second)
                throw std::runtime_error("chern: evaluations at two generic points disagree");
            Int value = integral_value(first);
            ps.sum += r.components[i].sign * value;
            ps.per_component.push_back(std::move(value));
        }
        if (ps.sum != 0) all_zero = false;
        out.sums.push_back(std::move(ps));
    }
    out.status = all_zero ? RelationVerification::Status::pass
                          : RelationVerification::Status::fail;
    return out;
}

}  // namespace qtcob

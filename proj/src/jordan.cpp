#include "orbitdx/jordan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbitdx {

JordanStructure::JordanStructure(std::vector<EigenChains> eigs) : eigs_(std::move(eigs)) {
    for (size_t a = 0; a < eigs_.size(); ++a) {
        if (eigs_[a].chains.empty())
            throw InvariantError("eigenvalue " + eigs_[a].value.str() + " has no chains");
        for (int len : eigs_[a].chains)
            if (len < 1)
                throw InvariantError("chain length must be positive");
        std::sort(eigs_[a].chains.begin(), eigs_[a].chains.end(), std::greater<int>());
        for (size_t b = a + 1; b < eigs_.size(); ++b)
            if (eigs_[a].value == eigs_[b].value)
                throw InvariantError("duplicate eigenvalue " + eigs_[a].value.str());
    }
}

int JordanStructure::total_size() const {
    int n = 0;
    for (const auto& e : eigs_)
        for (int len : e.chains)
            n += len;
    return n;
}

bool JordanStructure::has_eigenvalue(const GaussianRational& v) const {
    for (const auto& e : eigs_)
        if (e.value == v)
            return true;
    return false;
}

const std::vector<int>& JordanStructure::chains_of(const GaussianRational& v) const {
    for (const auto& e : eigs_)
        if (e.value == v)
            return e.chains;
    throw EigenvalueError(v.str() + " is not an eigenvalue of the structure");
}

std::vector<GaussianRational> JordanStructure::eigenvalue_list() const {
    std::vector<GaussianRational> out;
    out.reserve(eigs_.size());
    for (const auto& e : eigs_)
        out.push_back(e.value);
    return out;
}

bool operator==(const JordanStructure& a, const JordanStructure& b) {
    if (a.eigs_.size() != b.eigs_.size())
        return false;
    auto key = [](const JordanStructure& s) {
        std::map<GaussianRational, std::vector<int>> m;
        for (const auto& e : s.eigs_)
            m[e.value] = e.chains;
        return m;
    };
    return key(a) == key(b);
}

std::string JordanStructure::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < eigs_.size(); ++k) {
        os << (k ? ", " : "") << eigs_[k].value.str() << ": [";
        for (size_t c = 0; c < eigs_[k].chains.size(); ++c)
            os << (c ? "," : "") << eigs_[k].chains[c];
        os << "]";
    }
    os << "}";
    return os.str();
}

TypeSequence::TypeSequence(std::vector<TypeStep> steps) : steps_(std::move(steps)) {
    std::map<GaussianRational, int> last_n;
    for (const auto& s : steps_) {
        if (s.n < 1)
            throw InvariantError("type sequence step with n < 1");
        auto it = last_n.find(s.lambda);
        if (it != last_n.end() && s.n > it->second)
            throw InvariantError("n values of eigenvalue " + s.lambda.str() +
                                 " increase along the sequence");
        last_n[s.lambda] = s.n;
    }
}

int TypeSequence::total_size() const {
    int n = 0;
    for (const auto& s : steps_)
        n += s.n;
    return n;
}

int TypeSequence::offset(int k) const {
    if (k < 1 || k > count() + 1)
        throw IndexError("step index out of range");
    int off = 0;
    for (int l = 1; l < k; ++l)
        off += steps_[l - 1].n;
    return off;
}

TypeSequence TypeSequence::tail(int k) const {
    if (k < 1 || k > count() + 1)
        throw IndexError("step index out of range");
    return TypeSequence(std::vector<TypeStep>(steps_.begin() + (k - 1), steps_.end()));
}

bool operator==(const TypeSequence& a, const TypeSequence& b) {
    if (a.steps_.size() != b.steps_.size())
        return false;
    for (size_t k = 0; k < a.steps_.size(); ++k)
        if (a.steps_[k].lambda != b.steps_[k].lambda || a.steps_[k].n != b.steps_[k].n)
            return false;
    return true;
}

JordanStructure project(const JordanStructure& j, const GaussianRational& lambda) {
    if (!j.has_eigenvalue(lambda))
        throw EigenvalueError("cannot project along " + lambda.str() + ": not an eigenvalue");
    std::vector<EigenChains> out;
    for (const auto& e : j.eigenvalues()) {
        if (e.value != lambda) {
            out.push_back(e);
            continue;
        }
        std::vector<int> shortened;
        for (int len : e.chains)
            if (len > 1)
                shortened.push_back(len - 1);
        if (!shortened.empty())
            out.push_back({e.value, std::move(shortened)});
    }
    return JordanStructure(std::move(out));
}

TypeSequence type_sequence(const JordanStructure& j) {
    return type_sequence(j, j.eigenvalue_list());
}

TypeSequence type_sequence(const JordanStructure& j, const std::vector<GaussianRational>& order) {
    if (order.size() != j.eigenvalues().size())
        throw InvariantError("eigenvalue order is not a permutation of the eigenvalue set");
    for (size_t a = 0; a < order.size(); ++a) {
        if (!j.has_eigenvalue(order[a]))
            throw InvariantError("eigenvalue order mentions " + order[a].str() +
                                 " which is not in the structure");
        for (size_t b = a + 1; b < order.size(); ++b)
            if (order[a] == order[b])
                throw InvariantError("eigenvalue order repeats " + order[a].str());
    }
    std::vector<TypeStep> steps;
    for (const auto& v : order) {
        const auto& chains = j.chains_of(v); // sorted non-increasing
        int longest = chains.front();
        for (int occ = 1; occ <= longest; ++occ) {
            int n = 0;
            for (int len : chains)
                if (len >= occ)
                    ++n;
            steps.push_back({v, n});
        }
    }
    return TypeSequence(std::move(steps));
}

JordanStructure structure_from_sequence(const TypeSequence& t) {
    std::vector<GaussianRational> order;
    std::map<GaussianRational, std::vector<int>> ns;
    for (const auto& s : t.steps()) {
        auto it = ns.find(s.lambda);
        if (it == ns.end()) {
            order.push_back(s.lambda);
            ns[s.lambda] = {s.n};
        } else {
            it->second.push_back(s.n); // monotonicity already validated
        }
    }
    std::vector<EigenChains> eigs;
    for (const auto& v : order) {
        const auto& n = ns[v];
        std::vector<int> chains;
        for (int c = 1; c <= n.front(); ++c) {
            int len = 0;
            for (int nk : n)
                if (nk >= c)
                    ++len;
            chains.push_back(len);
        }
        eigs.push_back({v, std::move(chains)});
    }
    return JordanStructure(std::move(eigs));
}

long orbit_dim(const JordanStructure& j) {
    long n = j.total_size();
    long centralizer = 0;
    for (const auto& e : j.eigenvalues())
        for (int a : e.chains)
            for (int b : e.chains)
                centralizer += std::min(a, b);
    return n * n - centralizer;
}

Mat jordan_matrix(const TypeSequence& t) {
    int n = t.total_size();
    int m = t.count();
    Mat out(n, n);
    for (int k = 1; k <= m; ++k) {
        const TypeStep& step = t.steps()[k - 1];
        int off = t.offset(k);
        for (int c = 0; c < step.n; ++c)
            out.at(off + c, off + c) = step.lambda;
        // the previous occurrence of this eigenvalue links the chains
        int parent = 0;
        for (int l = k - 1; l >= 1; --l)
            if (t.steps()[l - 1].lambda == step.lambda) {
                parent = l;
                break;
            }
        if (parent > 0) {
            int poff = t.offset(parent);
            for (int c = 0; c < step.n; ++c)
                out.at(poff + c, off + c) = GaussianRational(1);
        }
    }
    return out;
}

} // namespace orbitdx

#include "orbitdx/oracle.hpp"

namespace orbitdx {

std::vector<int> WeyrTable::chains() const {
    std::vector<int> diffs;
    int prev = 0;
    for (int d : dims) {
        if (d <= prev)
            break;
        diffs.push_back(d - prev);
        prev = d;
    }
    std::vector<int> chains;
    if (diffs.empty())
        return chains;
    for (int c = 1; c <= diffs.front(); ++c) {
        int len = 0;
        for (int w : diffs)
            if (w >= c)
                ++len;
        chains.push_back(len);
    }
    return chains;
}

WeyrTable weyr(const Mat& a, const GaussianRational& lambda) {
    if (a.rows() != a.cols())
        throw ShapeError("weyr needs a square matrix");
    int n = a.rows();
    Mat shifted = a - lambda * Mat::identity(n);
    WeyrTable out{lambda, {}};
    Mat power = shifted;
    while (true) {
        int d = n - rank(power);
        if (out.dims.empty() && d == 0) {
            out.dims.push_back(0);
            break;
        }
        if (!out.dims.empty() && d == out.dims.back()) {
            out.dims.push_back(d); // stabilized
            break;
        }
        out.dims.push_back(d);
        if (d == n)
            break;
        power = power * shifted;
    }
    return out;
}

JordanStructure jordan_structure_of(const Mat& a,
                                    const std::vector<GaussianRational>& eigenvalues) {
    if (a.rows() != a.cols())
        throw ShapeError("jordan_structure_of needs a square matrix");
    for (size_t x = 0; x < eigenvalues.size(); ++x)
        for (size_t y = x + 1; y < eigenvalues.size(); ++y)
            if (eigenvalues[x] == eigenvalues[y])
                throw EigenvalueError("eigenvalue list repeats " + eigenvalues[x].str());
    std::vector<EigenChains> eigs;
    int total = 0;
    for (const auto& v : eigenvalues) {
        WeyrTable t = weyr(a, v);
        if (t.multiplicity() == 0)
            throw EigenvalueError("supplied eigenvalue " + v.str() + " has trivial kernel");
        total += t.multiplicity();
        eigs.push_back({v, t.chains()});
    }
    if (total != a.rows())
        throw EigenvalueError("spectrum mismatch: multiplicities sum to " + std::to_string(total) +
                              " but the matrix has size " + std::to_string(a.rows()));
    return JordanStructure(std::move(eigs));
}

OrbitPoint checked_orbit_point(Mat a, JordanStructure j) {
    OrbitReport report = verify_on_orbit(a, j);
    if (!report.match)
        throw EigenvalueError("matrix is not on the orbit: " + report.note);
    return {std::move(a), std::move(j)};
}

OrbitReport verify_on_orbit(const Mat& a, const JordanStructure& j) {
    OrbitReport report;
    report.expected = j;
    if (a.rows() != a.cols() || a.rows() != j.total_size()) {
        report.note = "matrix size " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " does not match structure size " + std::to_string(j.total_size());
        return report;
    }
    for (const auto& e : j.eigenvalues())
        report.tables.push_back(weyr(a, e.value));
    try {
        report.found = jordan_structure_of(a, j.eigenvalue_list());
        report.match = (*report.found == j);
        if (!report.match)
            report.note = "found " + report.found->str() + ", expected " + j.str();
    } catch (const EigenvalueError& e) {
        report.note = e.what();
    }
    return report;
}

} // namespace orbitdx

#include "orbitdx/json_io.hpp"

#include <fstream>

namespace orbitdx {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        bad(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer())
        bad(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

GaussianRational scalar_field(const json& v) {
    if (!v.is_string())
        bad("scalar values must be strings");
    return GaussianRational::parse(v.get<std::string>());
}

std::pair<int, int> parse_pair_key(const std::string& key) {
    size_t comma = key.find(',');
    if (comma == std::string::npos)
        bad("block key \"" + key + "\" must look like \"i,j\"");
    try {
        return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    } catch (const std::exception&) {
        bad("block key \"" + key + "\" must look like \"i,j\"");
    }
}

std::string pair_key(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

} // namespace

json to_json(const Mat& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat mat_from_json(const json& j) {
    int rows = int_field(j, "rows");
    int cols = int_field(j, "cols");
    const json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        bad("entries must be an array of " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            bad("row " + std::to_string(i + 1) + " must have " + std::to_string(cols) +
                " entries");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = scalar_field(row.at(c));
    }
    return m;
}

json to_json(const JordanStructure& s) {
    json eigs = json::array();
    for (const auto& e : s.eigenvalues())
        eigs.push_back({{"value", e.value.str()}, {"chains", e.chains}});
    return {{"eigenvalues", std::move(eigs)}};
}

JordanStructure structure_from_json(const json& j) {
    const json& eigs = field(j, "eigenvalues");
    if (!eigs.is_array())
        bad("eigenvalues must be an array");
    std::vector<EigenChains> out;
    for (const json& e : eigs) {
        EigenChains ec;
        ec.value = scalar_field(field(e, "value"));
        const json& chains = field(e, "chains");
        if (!chains.is_array())
            bad("chains must be an array");
        for (const json& c : chains) {
            if (!c.is_number_integer())
                bad("chain lengths must be integers");
            ec.chains.push_back(c.get<int>());
        }
        out.push_back(std::move(ec));
    }
    try {
        return JordanStructure(std::move(out));
    } catch (const InvariantError& e) {
        bad(e.what());
    }
}

json to_json(const TypeSequence& t) {
    json steps = json::array();
    for (const auto& s : t.steps())
        steps.push_back({{"lambda", s.lambda.str()}, {"n", s.n}});
    return {{"steps", std::move(steps)}};
}

TypeSequence type_sequence_from_json(const json& j) {
    const json& steps = field(j, "steps");
    if (!steps.is_array())
        bad("steps must be an array");
    std::vector<TypeStep> out;
    for (const json& s : steps)
        out.push_back({scalar_field(field(s, "lambda")), int_field(s, "n")});
    try {
        return TypeSequence(std::move(out));
    } catch (const InvariantError& e) {
        bad(e.what());
    }
}

json to_json(const CanonicalCoords& c) {
    const TypeSequence& t = c.type_seq();
    json q = json::object(), p = json::object();
    for (int j = 1; j <= t.count(); ++j)
        for (int i = j + 1; i <= t.count(); ++i) {
            q[pair_key(i, j)] = to_json(c.q(i, j));
            p[pair_key(j, i)] = to_json(c.p(j, i));
        }
    return {{"type_sequence", to_json(t)}, {"q", std::move(q)}, {"p", std::move(p)}};
}

CanonicalCoords coords_from_json(const json& j) {
    TypeSequence t = type_sequence_from_json(field(j, "type_sequence"));
    CanonicalCoords coords(t);
    const json& q = field(j, "q");
    const json& p = field(j, "p");
    if (!q.is_object() || !p.is_object())
        bad("q and p must be objects keyed by block pairs");
    int expected = t.count() * (t.count() - 1) / 2;
    if (static_cast<int>(q.size()) != expected || static_cast<int>(p.size()) != expected)
        bad("coordinates must carry exactly one q and one p block per pair j < i");
    for (auto it = q.begin(); it != q.end(); ++it) {
        auto [i, jj] = parse_pair_key(it.key());
        try {
            coords.set_q(i, jj, mat_from_json(it.value()));
        } catch (const Error& e) {
            bad("block q " + it.key() + ": " + e.what());
        }
    }
    for (auto it = p.begin(); it != p.end(); ++it) {
        auto [jj, i] = parse_pair_key(it.key());
        try {
            coords.set_p(jj, i, mat_from_json(it.value()));
        } catch (const Error& e) {
            bad("block p " + it.key() + ": " + e.what());
        }
    }
    return coords;
}

json to_json(const Chart& chart) {
    json perm = json::array();
    for (int v : chart.perm)
        perm.push_back(v + 1);
    return {{"perm", std::move(perm)}};
}

Chart chart_from_json(const json& j) {
    const json& perm = field(j, "perm");
    if (!perm.is_array())
        bad("perm must be an array");
    Chart chart;
    for (const json& v : perm) {
        if (!v.is_number_integer())
            bad("perm entries must be integers");
        chart.perm.push_back(v.get<int>() - 1);
    }
    int n = static_cast<int>(chart.perm.size());
    std::vector<bool> seen(n, false);
    for (int v : chart.perm) {
        if (v < 0 || v >= n || seen[v])
            bad("perm is not a permutation of 1..n");
        seen[v] = true;
    }
    return chart;
}

json to_json(const CoordinateIndex& idx) {
    return {{"kind", idx.kind == CoordKind::P ? "p" : "q"},
            {"block", {idx.block_row, idx.block_col}},
            {"entry", {idx.row + 1, idx.col + 1}}};
}

json to_json(const WeyrTable& t) {
    return {{"eigenvalue", t.eigenvalue.str()}, {"dims", t.dims}};
}

json to_json(const OrbitReport& r) {
    json weyr = json::object();
    for (const auto& t : r.tables)
        weyr[t.eigenvalue.str()] = t.dims;
    json out = {{"match", r.match},
                {"expected", to_json(r.expected)},
                {"found", r.found ? to_json(*r.found) : json(nullptr)},
                {"weyr", std::move(weyr)}};
    if (!r.note.empty())
        out["note"] = r.note;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void dump_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace orbitdx

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "orbitdx/json_io.hpp"
#include "orbitdx/oracle.hpp"
#include "orbitdx/orbit.hpp"
#include "orbitdx/random_gen.hpp"
#include "orbitdx/symplectic.hpp"

using namespace orbitdx;

namespace {

// Exit codes are stable API:
//   0 ok, 2 input error, 3 chart/extraction failure, 4 residue mismatch,
//   5 verification mismatch, 6 persistent degeneracy.
constexpr int kOk = 0;
constexpr int kInput = 2;
constexpr int kExtract = 3;
constexpr int kResidue = 4;
constexpr int kMismatch = 5;
constexpr int kDegenerate = 6;

struct Exit {
    int code;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

[[noreturn]] void fail(int code, const std::string& msg) {
    std::cerr << "orbitdx: " << msg << "\n";
    throw Exit{code};
}

uint64_t resolve_seed(const std::optional<uint64_t>& flag) {
    if (flag)
        return *flag;
    if (const char* env = std::getenv("ORBITDX_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

JordanStructure load_structure(const std::string& path) {
    return structure_from_json(load_json_file(path));
}

Mat load_matrix(const std::string& path) { return mat_from_json(load_json_file(path)); }

std::vector<GaussianRational> parse_eigenvalue_list(const std::string& csv) {
    std::vector<GaussianRational> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string item =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        out.push_back(GaussianRational::parse(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

GaussianRational coordinate_value(const CanonicalCoords& c, const CoordinateIndex& idx) {
    const Mat& b = idx.kind == CoordKind::P ? c.p(idx.block_row, idx.block_col)
                                            : c.q(idx.block_row, idx.block_col);
    return b.at(idx.row, idx.col);
}

// Draws coordinates until the parameterized point verifies on the orbit;
// at most three draws, then the sample stream is declared degenerate.
CanonicalCoords draw_generic_coords(const TypeSequence& t, const JordanStructure& s, Rng& rng,
                                    long bound, bool with_imaginary) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        CanonicalCoords c = random_coords(t, rng, bound, with_imaginary);
        if (verify_on_orbit(parameterize(c), s).match)
            return c;
    }
    throw DegenerateSampleError("three random coordinate samples in a row were degenerate");
}

void cmd_param(const std::string& structure_file, const std::string& coords_file) {
    JordanStructure s = load_structure(structure_file);
    CanonicalCoords c = coords_from_json(load_json_file(coords_file));
    if (c.type_seq() != type_sequence(s))
        fail(kInput, "coordinates were built for a different type sequence than the structure");
    emit(to_json(parameterize(c)));
}

void cmd_extract(const std::string& structure_file, const std::string& matrix_file,
                 const std::string& chart_arg) {
    JordanStructure s = load_structure(structure_file);
    TypeSequence t = type_sequence(s);
    Mat a = load_matrix(matrix_file);
    Chart chart;
    if (chart_arg == "auto")
        chart = find_chart(t, a);
    else
        chart = chart_from_json(load_json_file(chart_arg));
    CanonicalCoords c = extract(t, a, chart);
    emit({{"chart", to_json(chart)}, {"coords", to_json(c)}});
}

void cmd_verify_darboux(const std::string& structure_file, const std::string& coords_file,
                        const std::optional<uint64_t>& seed, long bound, bool with_imaginary,
                        bool corrupt_tangent) {
    JordanStructure s = load_structure(structure_file);
    TypeSequence t = type_sequence(s);
    CanonicalCoords c(t);
    if (!coords_file.empty()) {
        c = coords_from_json(load_json_file(coords_file));
        if (c.type_seq() != t)
            fail(kInput, "coordinates were built for a different type sequence than the structure");
    } else {
        Rng rng(resolve_seed(seed));
        c = draw_generic_coords(t, s, rng, bound, with_imaginary);
    }
    Mat gram = gram_matrix(c);
    if (corrupt_tangent && gram.rows() > 0)
        gram.at(0, gram.cols() - 1) += GaussianRational(1);
    Mat canonical = canonical_gram(t);
    bool match = gram == canonical;
    json enumeration = json::array();
    for (const auto& idx : coordinate_enumeration(t))
        enumeration.push_back(to_json(idx));
    emit({{"enumeration", std::move(enumeration)},
          {"gram", to_json(gram)},
          {"canonical", to_json(canonical)},
          {"match", match}});
    if (!match) {
        for (int i = 0; i < gram.rows(); ++i)
            for (int j = 0; j < gram.cols(); ++j)
                if (gram.at(i, j) != canonical.at(i, j))
                    fail(kMismatch, "gram(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") = " + gram.at(i, j).str() + ", canonical has " +
                                        canonical.at(i, j).str());
        throw Exit{kMismatch};
    }
}

void cmd_project(const std::string& structure_file, const std::string& eigenvalue) {
    JordanStructure s = load_structure(structure_file);
    emit(to_json(project(s, GaussianRational::parse(eigenvalue))));
}

void cmd_info(const std::string& structure_file) {
    JordanStructure s = load_structure(structure_file);
    TypeSequence t = type_sequence(s);
    json blocks = json::array();
    for (int j = 1; j <= t.count(); ++j)
        for (int i = j + 1; i <= t.count(); ++i) {
            int ni = t.steps()[i - 1].n, nj = t.steps()[j - 1].n;
            blocks.push_back({{"q", std::to_string(i) + "," + std::to_string(j)},
                              {"q_shape", {ni, nj}},
                              {"p", std::to_string(j) + "," + std::to_string(i)},
                              {"p_shape", {nj, ni}}});
        }
    emit({{"n", t.total_size()},
          {"type_sequence", to_json(t)},
          {"orbit_dim", orbit_dim(s)},
          {"blocks", std::move(blocks)}});
}

void cmd_random_point(const std::string& structure_file, const std::optional<uint64_t>& seed,
                      const std::string& mode, long bound, bool with_imaginary) {
    JordanStructure s = load_structure(structure_file);
    TypeSequence t = type_sequence(s);
    Rng rng(resolve_seed(seed));
    if (mode == "coords") {
        CanonicalCoords c = draw_generic_coords(t, s, rng, bound, with_imaginary);
        emit(to_json(parameterize(c)));
    } else if (mode == "conjugate") {
        OrbitPoint point = checked_orbit_point(random_conjugate_point(t, rng, bound), s);
        emit(to_json(point.a));
    } else {
        fail(kInput, "mode must be coords or conjugate");
    }
}

void cmd_jordan_verify(const std::string& matrix_file, const std::string& eigenvalues_csv) {
    Mat a = load_matrix(matrix_file);
    std::vector<GaussianRational> eigs = parse_eigenvalue_list(eigenvalues_csv);
    json weyr_tables = json::object();
    for (const auto& v : eigs)
        weyr_tables[v.str()] = weyr(a, v).dims;
    JordanStructure found = jordan_structure_of(a, eigs); // throws on spectrum mismatch
    emit({{"structure", to_json(found)}, {"weyr", std::move(weyr_tables)}});
}

void cmd_roundtrip(const std::string& structure_file, const std::optional<uint64_t>& seed,
                   int trials, long bound, bool with_imaginary, bool corrupt_extract) {
    JordanStructure s = load_structure(structure_file);
    TypeSequence t = type_sequence(s);
    Rng rng(resolve_seed(seed));
    Chart id = Chart::identity(t.total_size());
    auto enumeration = coordinate_enumeration(t);
    for (int trial = 1; trial <= trials; ++trial) {
        CanonicalCoords c = draw_generic_coords(t, s, rng, bound, with_imaginary);
        CanonicalCoords back = extract(t, parameterize(c), id);
        if (corrupt_extract && !enumeration.empty() && trial == 1) {
            CoordinateIndex first = enumeration.front();
            Mat b = first.kind == CoordKind::P ? back.p(first.block_row, first.block_col)
                                               : back.q(first.block_row, first.block_col);
            b.at(first.row, first.col) += GaussianRational(1);
            if (first.kind == CoordKind::P)
                back.set_p(first.block_row, first.block_col, b);
            else
                back.set_q(first.block_row, first.block_col, b);
        }
        if (back != c) {
            for (const auto& idx : enumeration) {
                GaussianRational lhs = coordinate_value(back, idx);
                GaussianRational rhs = coordinate_value(c, idx);
                if (lhs != rhs)
                    fail(kMismatch, "trial " + std::to_string(trial) +
                                        ": extract(parameterize(c)) differs at " + idx.str() +
                                        ": " + lhs.str() + " vs " + rhs.str());
            }
            fail(kMismatch, "trial " + std::to_string(trial) + ": coordinate mismatch");
        }
        Mat a = random_conjugate_point(t, rng, bound);
        Chart chart = find_chart(t, a);
        Mat again = unapply_chart(parameterize(extract(t, a, chart)), chart);
        if (again != a)
            fail(kMismatch,
                 "trial " + std::to_string(trial) + ": parameterize(extract(a)) differs from a");
    }
    emit({{"trials", trials}, {"status", "pass"}});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact birational Darboux coordinates on similarity orbits"};
    app.require_subcommand(1);

    std::string structure_file, coords_file, matrix_file, eigenvalue, eigenvalues_csv;
    std::string chart_arg = "auto";
    std::string mode = "coords";
    std::optional<uint64_t> seed;
    long bound = 10000;
    int trials = 100;
    bool with_imaginary = false;
    bool corrupt_tangent = false, corrupt_extract = false;

    auto* cparam = app.add_subcommand("param", "coordinates -> matrix (A = Q rho Q^-1)");
    cparam->add_option("--structure", structure_file)->required();
    cparam->add_option("--coords", coords_file)->required();

    auto* cextract = app.add_subcommand("extract", "matrix -> coordinates via flights");
    cextract->add_option("--structure", structure_file)->required();
    cextract->add_option("--matrix", matrix_file)->required();
    cextract->add_option("--chart", chart_arg, "auto or a chart JSON file");

    auto* cverify = app.add_subcommand("verify-darboux", "compare Gram matrix to the canonical one");
    cverify->add_option("--structure", structure_file)->required();
    cverify->add_option("--coords", coords_file);
    cverify->add_option("--seed", seed);
    cverify->add_option("--bound", bound);
    cverify->add_flag("--complex", with_imaginary);
    cverify->add_flag("--corrupt-tangent", corrupt_tangent)->group("");

    auto* cproject = app.add_subcommand("project", "project the structure along an eigenvalue");
    cproject->add_option("--structure", structure_file)->required();
    cproject->add_option("--eigenvalue", eigenvalue)->required();

    auto* cinfo = app.add_subcommand("info", "sizes, type sequence, block layout");
    cinfo->add_option("--structure", structure_file)->required();

    auto* crandom = app.add_subcommand("random-point", "deterministic random orbit point");
    crandom->add_option("--structure", structure_file)->required();
    crandom->add_option("--seed", seed);
    crandom->add_option("--mode", mode, "coords or conjugate");
    crandom->add_option("--bound", bound);
    crandom->add_flag("--complex", with_imaginary);

    auto* cjordan = app.add_subcommand("jordan-verify", "Weyr tables and inferred structure");
    cjordan->add_option("--matrix", matrix_file)->required();
    cjordan->add_option("--eigenvalues", eigenvalues_csv)->required();

    auto* croundtrip = app.add_subcommand("roundtrip", "forward/inverse identity trials");
    croundtrip->add_option("--structure", structure_file)->required();
    croundtrip->add_option("--seed", seed);
    croundtrip->add_option("--trials", trials);
    croundtrip->add_option("--bound", bound);
    croundtrip->add_flag("--complex", with_imaginary);
    croundtrip->add_flag("--corrupt-extract", corrupt_extract)->group("");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(cparam))
            cmd_param(structure_file, coords_file);
        else if (app.got_subcommand(cextract))
            cmd_extract(structure_file, matrix_file, chart_arg);
        else if (app.got_subcommand(cverify))
            cmd_verify_darboux(structure_file, coords_file, seed, bound, with_imaginary,
                               corrupt_tangent);
        else if (app.got_subcommand(cproject))
            cmd_project(structure_file, eigenvalue);
        else if (app.got_subcommand(cinfo))
            cmd_info(structure_file);
        else if (app.got_subcommand(crandom))
            cmd_random_point(structure_file, seed, mode, bound, with_imaginary);
        else if (app.got_subcommand(cjordan))
            cmd_jordan_verify(matrix_file, eigenvalues_csv);
        else if (app.got_subcommand(croundtrip))
            cmd_roundtrip(structure_file, seed, trials, bound, with_imaginary, corrupt_extract);
        return kOk;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    } catch (const Exit& e) {
        return e.code;
    } catch (const FlightError& e) {
        std::cerr << "orbitdx: " << e.what() << "\n";
        return kExtract;
    } catch (const NoChartError& e) {
        std::cerr << "orbitdx: " << e.what() << "\n";
        return kExtract;
    } catch (const ResidueError& e) {
        std::cerr << "orbitdx: " << e.what() << "\n";
        return kResidue;
    } catch (const DegenerateSampleError& e) {
        std::cerr << "orbitdx: " << e.what() << "\n";
        return kDegenerate;
    } catch (const InconsistentSystemError& e) {
        std::cerr << "orbitdx: " << e.what() << "\n";
        return kMismatch;
    } catch (const Error& e) {
        std::cerr << "orbitdx: " << e.what() << "\n";
        return kInput;
    }
}

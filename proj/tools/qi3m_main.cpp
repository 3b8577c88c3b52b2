// qi3m command-line front end. Talks to the core exclusively through the
// C API in qi3m/qi3m.h; file handling and argument parsing live here.

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qi3m/qi3m.h"

#ifndef QI3M_DEFAULT_PRESET_DIR
#define QI3M_DEFAULT_PRESET_DIR ""
#endif

namespace {

constexpr int kExitUsage = 1;

struct StringDeleter {
    void operator()(char* s) const { qi3m_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail(qi3m_status status, const char* message) {
    std::cerr << "qi3m: " << (message != nullptr ? message : "error") << "\n";
    std::exit(status == QI3M_OK ? kExitUsage : static_cast<int>(status));
}

// A spec argument is a literal path, or a preset name resolved against
// $QI_PRESET_DIR (falling back to the built-in preset directory).
std::string resolve_spec_path(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return arg;
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("QI_PRESET_DIR"); env != nullptr && *env != '\0')
        dirs.push_back(env);
    if (std::string(QI3M_DEFAULT_PRESET_DIR) != "") dirs.push_back(QI3M_DEFAULT_PRESET_DIR);
    for (const auto& dir : dirs) {
        const fs::path candidate = fs::path(dir) / (arg + ".json");
        if (fs::exists(candidate)) return candidate.string();
    }
    std::cerr << "qi3m: no such file or preset: " << arg << "\n";
    std::exit(2);
}

std::string read_file(const std::string& arg) {
    const std::string path = resolve_spec_path(arg);
    std::ifstream in(path);
    if (!in) {
        std::cerr << "qi3m: cannot read " << path << "\n";
        std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

qi3m_format parse_format(const std::string& name) {
    if (name == "machine-readable") return QI3M_FORMAT_MACHINE;
    return QI3M_FORMAT_TABLE;
}

struct ManifoldHandle {
    qi3m_manifold* m = nullptr;
    ~ManifoldHandle() { qi3m_manifold_free(m); }
};
struct SpaceHandle {
    qi3m_space* x = nullptr;
    ~SpaceHandle() { qi3m_space_free(x); }
};

ManifoldHandle load_manifold(const std::string& arg) {
    ManifoldHandle h;
    char* err = nullptr;
    const std::string text = read_file(arg);
    const qi3m_status st = qi3m_manifold_from_json(text.c_str(), &h.m, &err);
    if (st != QI3M_OK) fail(st, err);
    return h;
}

SpaceHandle load_space(const std::string& arg) {
    SpaceHandle h;
    char* err = nullptr;
    const std::string text = read_file(arg);
    const qi3m_status st = qi3m_space_from_json(text.c_str(), &h.x, &err);
    if (st != QI3M_OK) fail(st, err);
    return h;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact perturbative quantum invariants of 3-manifolds"};
    app.require_subcommand(1);
    std::string format_name = "table";

    // lmo <manifold> [--order N]
    auto* lmo = app.add_subcommand("lmo", "Diagram series of a manifold");
    std::string lmo_manifold;
    int lmo_order = 3;
    lmo->add_option("manifold", lmo_manifold, "manifold spec file or preset name")->required();
    lmo->add_option("--order", lmo_order, "truncation order (default 3)");
    lmo->add_option("--format", format_name, "table|machine-readable");

    // rw <manifold> <space> [--torsion-factor]
    auto* rw = app.add_subcommand("rw", "Weight evaluation of a manifold against a space");
    std::string rw_manifold, rw_space;
    bool rw_torsion = false;
    rw->add_option("manifold", rw_manifold, "manifold spec file or preset name")->required();
    rw->add_option("space", rw_space, "space spec file or preset name")->required();
    rw->add_flag("--torsion-factor", rw_torsion,
                 "multiply by |Tor|^n for b1 = 1 instead of rejecting nontrivial torsion");
    rw->add_option("--format", format_name, "table|machine-readable");

    // hilb [--max n]
    auto* hilb = app.add_subcommand("hilb", "Euler numbers of the compact families");
    int hilb_max = 7;
    hilb->add_option("--max", hilb_max, "largest n to print (default 7)");
    hilb->add_option("--format", format_name, "table|machine-readable");

    // lambda <z-file> <g-file>
    auto* lambda = app.add_subcommand("lambda", "Lambda vector from Z-values and pairing data");
    std::string lambda_z, lambda_g;
    lambda->add_option("z-file", lambda_z, "Z-value file")->required();
    lambda->add_option("g-file", lambda_g, "pairing data file")->required();
    lambda->add_option("--format", format_name, "table|machine-readable");

    // pfaffian <matrix-file> [--method m]
    auto* pf = app.add_subcommand("pfaffian", "Pfaffian of an antisymmetric rational matrix");
    std::string pf_matrix, pf_method = "combinatorial";
    pf->add_option("matrix-file", pf_matrix, "matrix file")->required();
    pf->add_option("--method", pf_method, "combinatorial|berezin");
    pf->add_option("--format", format_name, "table|machine-readable");

    // consum [--n k]
    auto* consum = app.add_subcommand("consum", "Verify the connected-sum identity symbolically");
    int consum_n = 2;
    consum->add_option("--n", consum_n, "level of the identity (default 2)");
    consum->add_option("--format", format_name, "table|machine-readable");

    CLI11_PARSE(app, argc, argv);
    const qi3m_format format = parse_format(format_name);

    char* out = nullptr;
    char* err = nullptr;
    qi3m_status st = QI3M_OK;

    if (lmo->parsed()) {
        const ManifoldHandle m = load_manifold(lmo_manifold);
        st = qi3m_lmo_series(m.m, lmo_order, format, &out, &err);
    } else if (rw->parsed()) {
        const ManifoldHandle m = load_manifold(rw_manifold);
        const SpaceHandle x = load_space(rw_space);
        st = qi3m_rw_invariant(m.m, x.x, rw_torsion ? 1 : 0, &out, &err);
    } else if (hilb->parsed()) {
        std::ostringstream table;
        if (format == QI3M_FORMAT_MACHINE) table << "[";
        for (int n = 0; n <= hilb_max; ++n) {
            ApiString h, k;
            char* hv = nullptr;
            st = qi3m_euler_hilb(n, &hv, &err);
            if (st != QI3M_OK) fail(st, err);
            h.reset(hv);
            std::string kummer = "-";
            if (n >= 1) {
                char* kv = nullptr;
                st = qi3m_euler_kummer(n, &kv, &err);
                if (st != QI3M_OK) fail(st, err);
                k.reset(kv);
                kummer = k.get();
            }
            if (format == QI3M_FORMAT_MACHINE) {
                table << (n > 0 ? "," : "") << "{\"n\":" << n << ",\"hilb\":\"" << h.get()
                      << "\",\"kummer\":" << (n >= 1 ? "\"" + kummer + "\"" : "null") << "}";
            } else {
                table << n << "\t" << h.get() << "\t" << kummer << "\n";
            }
        }
        if (format == QI3M_FORMAT_MACHINE) table << "]";
        std::cout << table.str();
        if (format == QI3M_FORMAT_MACHINE) std::cout << "\n";
        return 0;
    } else if (lambda->parsed()) {
        const std::string z = read_file(lambda_z);
        const std::string g = read_file(lambda_g);
        st = qi3m_lambda_from_z(z.c_str(), g.c_str(), format, &out, &err);
    } else if (pf->parsed()) {
        const std::string matrix = read_file(pf_matrix);
        st = qi3m_pfaffian(matrix.c_str(), pf_method.c_str(), &out, &err);
    } else if (consum->parsed()) {
        int verified = 0;
        st = qi3m_verify_consum(consum_n, format, &verified, &out, &err);
        if (st == QI3M_OK && verified == 0) {
            std::cout << out;
            qi3m_string_free(out);
            return kExitUsage;
        }
    }

    if (st != QI3M_OK) fail(st, err);
    ApiString guard(out);
    if (out != nullptr) {
        std::cout << out;
        if (*out != '\0' && out[std::strlen(out) - 1] != '\n') std::cout << "\n";
    }
    return 0;
}

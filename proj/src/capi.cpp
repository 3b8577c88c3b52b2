#include "qi3m/qi3m.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qi/io.hpp"

struct qi3m_manifold {
    qi::ClassicalData data;
};

struct qi3m_space {
    qi::WeightData data;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err != nullptr) *err = dup_string(msg);
}

// Runs the callback and translates exceptions into status codes + messages.
template <typename Fn>
qi3m_status guarded(char** err, Fn&& fn) {
    try {
        fn();
        return QI3M_OK;
    } catch (const qi::ParseError& e) {
        set_err(err, e.what());
        return QI3M_ERR_PARSE;
    } catch (const qi::UnsupportedError& e) {
        set_err(err, e.what());
        return QI3M_ERR_UNSUPPORTED;
    } catch (const qi::InvariantError& e) {
        set_err(err, e.what());
        return QI3M_ERR_INVARIANT;
    } catch (const qi::DomainError& e) {
        set_err(err, e.what());
        return QI3M_ERR_INVARIANT;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return QI3M_ERR_PARSE;
    }
}

qi::io::Format to_format(qi3m_format f) {
    return f == QI3M_FORMAT_MACHINE ? qi::io::Format::Machine : qi::io::Format::Table;
}

}  // namespace

extern "C" {

const char* qi3m_version(void) { return "1.0.0"; }

void qi3m_string_free(char* s) { std::free(s); }

qi3m_status qi3m_manifold_from_json(const char* json_text, qi3m_manifold** out, char** err) {
    if (json_text == nullptr || out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    *out = nullptr;
    return guarded(err, [&] {
        *out = new qi3m_manifold{qi::io::parse_manifold(json_text)};
    });
}

void qi3m_manifold_free(qi3m_manifold* m) { delete m; }

qi3m_status qi3m_space_from_json(const char* json_text, qi3m_space** out, char** err) {
    if (json_text == nullptr || out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    *out = nullptr;
    return guarded(err, [&] {
        *out = new qi3m_space{qi::io::parse_space(json_text)};
    });
}

void qi3m_space_free(qi3m_space* x) { delete x; }

qi3m_status qi3m_lmo_series(const qi3m_manifold* m, int order, qi3m_format format, char** out,
                            char** err) {
    if (m == nullptr || out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    return guarded(err, [&] {
        const qi::FormalDiagramSeries s = qi::lmo_series(m->data, order);
        *out = dup_string(qi::io::render_diagram_series(s, to_format(format)));
    });
}

qi3m_status qi3m_rw_invariant(const qi3m_manifold* m, const qi3m_space* x, int torsion_factor,
                              char** out, char** err) {
    if (m == nullptr || x == nullptr || out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    return guarded(err, [&] {
        const qi::Rational v = qi::rw_invariant(
            m->data, x->data,
            torsion_factor != 0 ? qi::TorsionFactor::Multiply : qi::TorsionFactor::Reject);
        *out = dup_string(v.str());
    });
}

qi3m_status qi3m_rw_via_diagrams(const qi3m_manifold* m, const qi3m_space* x, char** out,
                                 char** err) {
    if (m == nullptr || x == nullptr || out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    return guarded(err, [&] {
        const qi::FormalDiagramSeries s = qi::lmo_series(m->data, x->data.n());
        *out = dup_string(qi::pair_weights(s, x->data).str());
    });
}

qi3m_status qi3m_euler_hilb(int n, char** out, char** err) {
    if (out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    return guarded(err, [&] { *out = dup_string(qi::hilbert_scheme_euler(n).get_str()); });
}

qi3m_status qi3m_euler_kummer(int n, char** out, char** err) {
    if (out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    return guarded(err, [&] { *out = dup_string(qi::kummer_euler(n).get_str()); });
}

qi3m_status qi3m_lambda_from_z(const char* z_json, const char* g_json, qi3m_format format,
                               char** out, char** err) {
    if (z_json == nullptr || g_json == nullptr || out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    return guarded(err, [&] {
        const qi::ZVector z = qi::io::parse_z_vector(z_json);
        const qi::GData g = qi::io::parse_g_data(g_json);
        const qi::LambdaVector l = qi::lambda_from_z(z, g);
        *out = dup_string(qi::io::render_lambda(l, to_format(format)));
    });
}

qi3m_status qi3m_pfaffian(const char* matrix_json, const char* method, char** out, char** err) {
    if (matrix_json == nullptr || out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    return guarded(err, [&] {
        qi::PfaffianMethod m = qi::PfaffianMethod::Combinatorial;
        if (method != nullptr) {
            const std::string name(method);
            if (name == "berezin")
                m = qi::PfaffianMethod::Berezin;
            else if (name != "combinatorial" && !name.empty())
                throw qi::ParseError("unknown Pfaffian method '" + name + "'");
        }
        const qi::AntisymMatrix a = qi::io::parse_antisym_matrix(matrix_json);
        *out = dup_string(qi::pfaffian(a, m).str());
    });
}

qi3m_status qi3m_verify_consum(int n, qi3m_format format, int* verified, char** out, char** err) {
    if (out == nullptr) {
        set_err(err, "null argument");
        return QI3M_ERR_PARSE;
    }
    return guarded(err, [&] {
        const qi::ConsumReport report = qi::verify_connected_sum(n);
        if (verified != nullptr) *verified = report.verified ? 1 : 0;
        *out = dup_string(qi::io::render_consum(report, to_format(format)));
    });
}

}  // extern "C"

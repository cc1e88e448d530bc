#include "ncphase.h"

#include "json.hpp"
#include "json_io.hpp"
#include "twist.hpp"
#include "verify.hpp"

#include <cstring>
#include <sstream>

using namespace ncps;

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& what) {
    if (err) *err = dup_string(what);
}

std::vector<Rat> parse_rat_list(const nlohmann::json& arr) {
    std::vector<Rat> out;
    for (const auto& v : arr) out.push_back(rat_parse(v.get<std::string>()));
    return out;
}

std::vector<std::vector<Rat>> parse_rat_matrix(const nlohmann::json& arr) {
    std::vector<std::vector<Rat>> out;
    for (const auto& row : arr) out.push_back(parse_rat_list(row));
    return out;
}

} // namespace

struct ncps_model {
    std::string kind; // kappa | tensorial | theta | snyder | dilation | lie
    std::optional<StructureConstants> C;
    // model parameters
    std::vector<Rat> a_vec;
    std::vector<std::vector<Rat>> matrix; // theta or dilation a
    int n = 0;
};

extern "C" {

ncps_model* ncps_model_from_json(const char* json_text, char** err) {
    if (!json_text) {
        set_err(err, "null document");
        return nullptr;
    }
    try {
        auto model = new ncps_model;
        model->kind = "lie";
        model->C = structure_constants_from_json(json_text);
        model->n = model->C->dim();
        return model;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

ncps_model* ncps_model_by_name(const char* name, const char* params_json, char** err) {
    if (!name) {
        set_err(err, "null model name");
        return nullptr;
    }
    try {
        nlohmann::json params = nlohmann::json::object();
        if (params_json && *params_json) params = nlohmann::json::parse(params_json);
        auto model = std::make_unique<ncps_model>();
        model->kind = name;
        if (model->kind == "kappa") {
            if (!params.contains("a"))
                throw StructuralError("kappa model needs {\"a\": [\"...\"]}");
            model->a_vec = parse_rat_list(params["a"]);
            model->n = static_cast<int>(model->a_vec.size());
            if (model->n < 1) throw StructuralError("kappa needs a nonempty a vector");
            model->C = *kappa_minkowski(model->a_vec, model->n).C;
        } else if (model->kind == "tensorial") {
            model->n = params.value("n", 2);
            model->C = *extended_tensorial(model->n).C;
        } else if (model->kind == "theta") {
            if (!params.contains("theta"))
                throw StructuralError("theta model needs {\"theta\": [[...]]}");
            model->matrix = parse_rat_matrix(params["theta"]);
            model->n = static_cast<int>(model->matrix.size());
            canonical_theta(model->matrix, 1); // validates shape
        } else if (model->kind == "snyder") {
            model->n = params.value("n", 2);
            if (model->n < 1) throw StructuralError("snyder needs n >= 1");
        } else if (model->kind == "dilation") {
            if (!params.contains("a"))
                throw StructuralError("dilation model needs {\"a\": [[...]]}");
            model->matrix = parse_rat_matrix(params["a"]);
            model->n = static_cast<int>(model->matrix.size());
            dilation_realization(model->matrix, 1); // validates shape
        } else {
            throw StructuralError("unknown model '" + model->kind + "'");
        }
        return model.release();
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

void ncps_model_free(ncps_model* model) { delete model; }

char* ncps_model_list(void) {
    return dup_string("kappa\ntensorial\ntheta\nsnyder\ndilation\n");
}

char* ncps_model_to_json(const ncps_model* model, char** err) {
    if (!model) {
        set_err(err, "null model");
        return nullptr;
    }
    if (!model->C) {
        set_err(err, "model '" + model->kind + "' is not of Lie type");
        return nullptr;
    }
    return dup_string(structure_constants_to_json(*model->C));
}

int ncps_jacobi_check(const ncps_model* model, char** report) {
    if (!model) {
        set_err(report, "null model");
        return NCPS_ERR_USAGE;
    }
    if (!model->C) {
        set_err(report, "model '" + model->kind + "' has no structure constants");
        return NCPS_ERR_USAGE;
    }
    auto violations =
        check_jacobi(model->C->dim(), model->C->signature(), model->C->dense());
    if (violations.empty()) {
        set_err(report, "valid\n");
        return NCPS_OK;
    }
    std::ostringstream os;
    for (const auto& v : violations)
        os << "(" << v.mu << "," << v.nu << "," << v.tau << ";" << v.lambda
           << "): " << rat_text(v.value) << "\n";
    set_err(report, os.str());
    return NCPS_CHECK_FAILED;
}

int ncps_jacobi_check_json(const char* json_text, char** report) {
    if (!json_text) {
        set_err(report, "null document");
        return NCPS_ERR_USAGE;
    }
    try {
        auto raw = raw_structure_constants_from_json(json_text);
        auto violations = check_jacobi(raw.n, raw.signature, raw.dense);
        if (violations.empty()) {
            set_err(report, "valid\n");
            return NCPS_OK;
        }
        std::ostringstream os;
        for (const auto& v : violations)
            os << "(" << v.mu << "," << v.nu << "," << v.tau << ";" << v.lambda
               << "): " << rat_text(v.value) << "\n";
        set_err(report, os.str());
        return NCPS_CHECK_FAILED;
    } catch (const std::exception& e) {
        set_err(report, e.what());
        return NCPS_ERR_USAGE;
    }
}

namespace {

Realization model_realization(const ncps_model& model, int order) {
    if (model.kind == "theta") return *canonical_theta(model.matrix, order).realization;
    if (model.kind == "snyder")
        return *snyder_symmetric(model.n, order).realization;
    if (model.kind == "dilation") return dilation_realization(model.matrix, order);
    if (!model.C) throw StructuralError("model has no realization");
    return weyl_realization(*model.C, order);
}

} // namespace

char* ncps_realization_text(const ncps_model* model, int order, char** err) {
    if (!model || order < 0) {
        set_err(err, "bad arguments");
        return nullptr;
    }
    try {
        auto r = model_realization(*model, order);
        std::ostringstream os;
        for (int mu = 0; mu < r.dim(); ++mu)
            os << "xhat" << mu << " = " << r.xhat(mu).text() << "\n";
        return dup_string(os.str());
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

char* ncps_dfunc_text(const ncps_model* model, int order, const char* method,
                      char** err) {
    if (!model || order < 0) {
        set_err(err, "bad arguments");
        return nullptr;
    }
    try {
        std::string m = method ? method : "";
        DFunction d;
        if (m.empty()) m = model->C ? "ode" : "diffop";
        if (m == "ode") {
            if (!model->C) throw StructuralError("ode solver needs a Lie-type model");
            d = d_function_ode(*model->C, order);
        } else if (m == "oracle") {
            if (!model->C) throw StructuralError("oracle needs a Lie-type model");
            d = d_function_oracle(*model->C, order);
        } else if (m == "diffop") {
            d = d_function_diffop(model_realization(*model, order));
        } else {
            throw StructuralError("unknown method '" + m + "'");
        }
        std::ostringstream os;
        for (size_t mu = 0; mu < d.D.size(); ++mu)
            os << "D" << mu << " = " << d.D[mu].text() << "\n";
        return dup_string(os.str());
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

char* ncps_coproduct_text(const ncps_model* model, int order, char** err) {
    if (!model || order < 0) {
        set_err(err, "bad arguments");
        return nullptr;
    }
    try {
        DFunction d = model->C ? d_function_ode(*model->C, order)
                               : d_function_diffop(model_realization(*model, order));
        auto cop = coproduct_from_d(d);
        std::ostringstream os;
        for (size_t mu = 0; mu < cop.comp.size(); ++mu)
            os << "Dp" << mu << " = " << cop.comp[mu].text() << "\n";
        return dup_string(os.str());
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

char* ncps_star_text(const ncps_model* model, int order, const int* f_expo, int f_len,
                     int const* g_expo, int g_len, char** err) {
    if (!model || order < 0 || !f_expo || !g_expo) {
        set_err(err, "bad arguments");
        return nullptr;
    }
    try {
        auto r = model_realization(*model, order);
        if (f_len != r.dim() || g_len != r.dim())
            throw StructuralError("monomial exponent length must equal the dimension");
        const auto& vt = r.table_ptr();
        XExpo fe(f_expo, f_expo + f_len), ge(g_expo, g_expo + g_len);
        XSeries f = XSeries::monomial(vt, order, fe);
        XSeries g = XSeries::monomial(vt, order, ge);
        return dup_string(star_product(r, f, g).text() + "\n");
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

int ncps_twist_check(const ncps_model* model, char** report) {
    if (!model) {
        set_err(report, "null model");
        return NCPS_ERR_USAGE;
    }
    if (!model->C) {
        set_err(report, "twist check needs a Lie-type model");
        return NCPS_ERR_USAGE;
    }
    try {
        auto rep = ln_twist_check(*model->C);
        set_err(report, rep.detail + "\n");
        return rep.ok ? NCPS_OK : NCPS_CHECK_FAILED;
    } catch (const std::exception& e) {
        set_err(report, e.what());
        return NCPS_ERR_DOMAIN;
    }
}

char* ncps_snyder_report(int dimension, int order, char** err) {
    try {
        if (dimension < 1 || order < 1) throw StructuralError("bad snyder parameters");
        std::ostringstream os;
        auto phi1 = snyder_symmetric_phi1(order);
        os << "phi1(u) = ";
        for (int k = 0; k <= order; ++k) {
            if (phi1[k] == 0) continue;
            if (k > 0) os << (phi1[k] > 0 ? " + " : " - ");
            Rat mag = phi1[k] > 0 ? phi1[k] : -phi1[k];
            os << rat_text(mag);
            if (k > 0) os << "*u" << (k > 1 ? "^" + std::to_string(k) : "");
        }
        os << "\n";
        auto rep = verify_snyder(dimension, order);
        os << rep.text();
        return dup_string(os.str());
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

char* ncps_qmultinomial_text(const int* exponents, int count, char** err) {
    if (!exponents || count < 1) {
        set_err(err, "bad exponent list");
        return nullptr;
    }
    try {
        std::vector<int> m(exponents, exponents + count);
        return dup_string(q_multinomial(m).text() + "\n");
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

int ncps_verify_model(const ncps_model* model, int order, char** report) {
    if (!model || order < 0) {
        set_err(report, "bad arguments");
        return NCPS_ERR_USAGE;
    }
    try {
        VerifyReport rep;
        if (model->kind == "kappa") rep = verify_kappa(model->a_vec, model->n, order);
        else if (model->kind == "tensorial") rep = verify_tensorial(model->n, order);
        else if (model->kind == "theta") rep = verify_theta(model->matrix, order);
        else if (model->kind == "snyder") rep = verify_snyder(model->n, order);
        else if (model->kind == "dilation") rep = verify_dilation(model->matrix, order);
        else if (model->C) rep = verify_lie(*model->C, order);
        else {
            set_err(report, "model cannot be verified");
            return NCPS_ERR_USAGE;
        }
        set_err(report, rep.text());
        return rep.ok ? NCPS_OK : NCPS_CHECK_FAILED;
    } catch (const std::exception& e) {
        set_err(report, e.what());
        return NCPS_ERR_DOMAIN;
    }
}

void ncps_string_free(char* text) { std::free(text); }

} // extern "C"

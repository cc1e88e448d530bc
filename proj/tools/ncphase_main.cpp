#include "ncphase.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { ncps_string_free(s); }
};

struct ModelGuard {
    ncps_model* m = nullptr;
    ~ModelGuard() { ncps_model_free(m); }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string vector_params(const std::string& csv) {
    nlohmann::json j;
    j["a"] = split(csv, ',');
    return j.dump();
}

std::string matrix_params(const std::string& key, const std::string& rows_csv) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : split(rows_csv, ';')) rows.push_back(split(row, ','));
    nlohmann::json j;
    j[key] = rows;
    return j.dump();
}

int order_guard(int order) {
    int cap = 8;
    if (const char* env = std::getenv("NCPHASE_MAX_ORDER")) cap = std::atoi(env);
    if (order < 0 || order > cap) {
        std::cerr << "error: order " << order << " outside [0," << cap
                  << "] (override with NCPHASE_MAX_ORDER)\n";
        return kExitUsage;
    }
    return 0;
}

struct ModelFlags {
    std::string model;
    std::string file;
    std::string a;
    std::string theta;
    int n = 2;
};

void add_model_flags(CLI::App* cmd, ModelFlags& mf) {
    cmd->add_option("--model", mf.model, "model name (see model-list)");
    cmd->add_option("--file", mf.file, "structure-constant JSON file");
    cmd->add_option("--a", mf.a,
                    "kappa vector \"1,0\" or dilation matrix rows \"0,1;-1,0\"");
    cmd->add_option("--theta", mf.theta, "theta matrix rows \"0,1;-1,0\"");
    cmd->add_option("--n", mf.n, "dimension for tensorial/snyder models");
}

ncps_model* build_model(const ModelFlags& mf, std::string& err_out) {
    StringGuard err;
    ncps_model* m = nullptr;
    if (!mf.file.empty()) {
        std::ifstream in(mf.file);
        if (!in) {
            err_out = "cannot open '" + mf.file + "'";
            return nullptr;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        m = ncps_model_from_json(ss.str().c_str(), &err.s);
    } else if (mf.model == "kappa") {
        m = ncps_model_by_name("kappa", vector_params(mf.a.empty() ? "1,0" : mf.a).c_str(),
                               &err.s);
    } else if (mf.model == "tensorial" || mf.model == "snyder") {
        nlohmann::json j;
        j["n"] = mf.n;
        m = ncps_model_by_name(mf.model.c_str(), j.dump().c_str(), &err.s);
    } else if (mf.model == "theta") {
        m = ncps_model_by_name(
            "theta", matrix_params("theta", mf.theta.empty() ? "0,1;-1,0" : mf.theta).c_str(),
            &err.s);
    } else if (mf.model == "dilation") {
        m = ncps_model_by_name(
            "dilation", matrix_params("a", mf.a.empty() ? "0,1;-1,0" : mf.a).c_str(),
            &err.s);
    } else if (mf.model.empty()) {
        err_out = "one of --model or --file is required";
        return nullptr;
    } else {
        err_out = "unknown model '" + mf.model + "'";
        return nullptr;
    }
    if (!m && err.s) err_out = err.s;
    return m;
}

int emit(const std::string& command, const std::string& output, ncps_model* model,
         const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["command"] = command;
        j["output"] = output;
        auto lines = nlohmann::json::array();
        for (const auto& line : split(output, '\n'))
            if (!line.empty()) lines.push_back(line);
        j["lines"] = lines;
        if (model) {
            StringGuard cjson, jerr;
            cjson.s = ncps_model_to_json(model, &jerr.s);
            if (cjson.s)
                j["structure_constants"] = nlohmann::json::parse(cjson.s);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << output;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ncphase: exact Weyl realizations, star products and twists "
                 "for noncommutative Minkowski spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    ModelFlags mf;
    int order = 3;
    std::string method;
    std::string f_mono, g_mono;
    std::string exponents;

    auto* jacobi = app.add_subcommand("jacobi", "validate the Jacobi identity");
    add_model_flags(jacobi, mf);

    auto* weyl = app.add_subcommand("weyl", "print the (Weyl) realization");
    add_model_flags(weyl, mf);
    weyl->add_option("--order", order, "truncation order");

    auto* dfunc = app.add_subcommand("dfunc", "deformed momentum addition D(k,q)");
    add_model_flags(dfunc, mf);
    dfunc->add_option("--order", order, "truncation order");
    dfunc->add_option("--method", method, "ode|diffop|oracle");

    auto* star = app.add_subcommand("star", "star product of coordinate monomials");
    add_model_flags(star, mf);
    star->add_option("--order", order, "truncation order");
    star->add_option("--f", f_mono, "left monomial exponents, e.g. 1,1,0")->required();
    star->add_option("--g", g_mono, "right monomial exponents")->required();

    auto* coproduct = app.add_subcommand("coproduct", "deformed coproduct of momenta");
    add_model_flags(coproduct, mf);
    coproduct->add_option("--order", order, "truncation order");

    auto* twist = app.add_subcommand("twist-check", "second-order ln F verification");
    add_model_flags(twist, mf);

    auto* snyder = app.add_subcommand("snyder", "Snyder symmetric-ordering report");
    snyder->add_option("--n", mf.n, "dimension");
    snyder->add_option("--order", order, "truncation order");

    auto* qmult = app.add_subcommand("qmultinomial", "q-deformed multinomial");
    qmult->add_option("--exponents", exponents, "exponents, e.g. 2,1")->required();

    app.add_subcommand("model-list", "list built-in models");

    auto* verify = app.add_subcommand("verify-all", "full golden-identity suite");
    add_model_flags(verify, mf);
    verify->add_option("--order", order, "truncation order");

    CLI11_PARSE(app, argc, argv);

    if (int rc = order_guard(order)) return rc;
    if (mf.n < 1 || mf.n > 6) {
        std::cerr << "error: dimension " << mf.n << " outside [1,6]\n";
        return kExitUsage;
    }

    auto need_model = [&](const char* cmd) -> ModelGuard {
        ModelGuard mg;
        std::string err;
        mg.m = build_model(mf, err);
        if (!mg.m) std::cerr << cmd << ": " << err << "\n";
        return mg;
    };

    if (app.got_subcommand("model-list")) {
        StringGuard s;
        s.s = ncps_model_list();
        return emit("model-list", s.s, nullptr, format);
    }

    if (app.got_subcommand(jacobi)) {
        StringGuard rep;
        int rc;
        ModelGuard mg;
        if (!mf.file.empty()) {
            // raw document: violations are reported, not rejected
            std::ifstream in(mf.file);
            if (!in) {
                std::cerr << "jacobi: cannot open '" << mf.file << "'\n";
                return kExitUsage;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            rc = ncps_jacobi_check_json(ss.str().c_str(), &rep.s);
        } else {
            std::string err;
            mg.m = build_model(mf, err);
            if (!mg.m) {
                std::cerr << "jacobi: " << err << "\n";
                return kExitUsage;
            }
            rc = ncps_jacobi_check(mg.m, &rep.s);
        }
        emit("jacobi", rep.s ? rep.s : "", mg.m, format);
        return rc == NCPS_OK ? 0 : (rc == NCPS_CHECK_FAILED ? kExitCheckFailed : kExitUsage);
    }

    if (app.got_subcommand(weyl)) {
        auto mg = need_model("weyl");
        if (!mg.m) return kExitUsage;
        StringGuard out, err;
        out.s = ncps_realization_text(mg.m, order, &err.s);
        if (!out.s) {
            std::cerr << "weyl: " << (err.s ? err.s : "failed") << "\n";
            return kExitUsage;
        }
        return emit("weyl", out.s, mg.m, format);
    }

    if (app.got_subcommand(dfunc)) {
        auto mg = need_model("dfunc");
        if (!mg.m) return kExitUsage;
        StringGuard out, err;
        out.s = ncps_dfunc_text(mg.m, order, method.empty() ? nullptr : method.c_str(),
                                &err.s);
        if (!out.s) {
            std::cerr << "dfunc: " << (err.s ? err.s : "failed") << "\n";
            return kExitUsage;
        }
        return emit("dfunc", out.s, mg.m, format);
    }

    if (app.got_subcommand(star)) {
        auto mg = need_model("star");
        if (!mg.m) return kExitUsage;
        std::vector<int> fe, ge;
        for (const auto& t : split(f_mono, ',')) fe.push_back(std::atoi(t.c_str()));
        for (const auto& t : split(g_mono, ',')) ge.push_back(std::atoi(t.c_str()));
        StringGuard out, err;
        out.s = ncps_star_text(mg.m, order, fe.data(), static_cast<int>(fe.size()),
                               ge.data(), static_cast<int>(ge.size()), &err.s);
        if (!out.s) {
            std::cerr << "star: " << (err.s ? err.s : "failed") << "\n";
            return kExitUsage;
        }
        return emit("star", out.s, mg.m, format);
    }

    if (app.got_subcommand(coproduct)) {
        auto mg = need_model("coproduct");
        if (!mg.m) return kExitUsage;
        StringGuard out, err;
        out.s = ncps_coproduct_text(mg.m, order, &err.s);
        if (!out.s) {
            std::cerr << "coproduct: " << (err.s ? err.s : "failed") << "\n";
            return kExitUsage;
        }
        return emit("coproduct", out.s, mg.m, format);
    }

    if (app.got_subcommand(twist)) {
        auto mg = need_model("twist-check");
        if (!mg.m) return kExitUsage;
        StringGuard rep;
        int rc = ncps_twist_check(mg.m, &rep.s);
        emit("twist-check", rep.s ? rep.s : "", mg.m, format);
        return rc == NCPS_OK ? 0 : (rc == NCPS_CHECK_FAILED ? kExitCheckFailed : kExitUsage);
    }

    if (app.got_subcommand(snyder)) {
        StringGuard out, err;
        out.s = ncps_snyder_report(mf.n, order, &err.s);
        if (!out.s) {
            std::cerr << "snyder: " << (err.s ? err.s : "failed") << "\n";
            return kExitUsage;
        }
        return emit("snyder", out.s, nullptr, format);
    }

    if (app.got_subcommand(qmult)) {
        std::vector<int> m;
        for (const auto& t : split(exponents, ',')) m.push_back(std::atoi(t.c_str()));
        StringGuard out, err;
        out.s = ncps_qmultinomial_text(m.data(), static_cast<int>(m.size()), &err.s);
        if (!out.s) {
            std::cerr << "qmultinomial: " << (err.s ? err.s : "failed") << "\n";
            return kExitUsage;
        }
        return emit("qmultinomial", out.s, nullptr, format);
    }

    if (app.got_subcommand(verify)) {
        auto mg = need_model("verify-all");
        if (!mg.m) return kExitUsage;
        StringGuard rep;
        int rc = ncps_verify_model(mg.m, order, &rep.s);
        emit("verify-all", rep.s ? rep.s : "", mg.m, format);
        return rc == NCPS_OK ? 0 : (rc == NCPS_CHECK_FAILED ? kExitCheckFailed : kExitUsage);
    }

    return kExitUsage;
}

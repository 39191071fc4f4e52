// Command-line front end for the exact weighted-Hurwitz engine. Every
// subcommand prints a deterministic document (JSON by default) that echoes
// its inputs. Exit codes: 0 ok, 1 usage, 2 domain error, 3 verification
// mismatch under --strict.

#include <qhw/json_io.hpp>
#include <qhw/parallel.hpp>
#include <qhw/tau.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using qhw::Json;
using qhw::Partition;
using qhw::Rational;
using qhw::WeightModel;

std::vector<Partition> parse_profiles(const std::string& s) {
    std::vector<Partition> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) out.push_back(Partition::parse(tok));
    if (out.empty()) throw qhw::DomainError("empty profile list");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(qhw::parse_rational(tok));
    return out;
}

// Flattens a document into "key,value" rows for --format csv, and
// "key: value" lines for --format text.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& value : j) flatten(value, prefix + "[" + std::to_string(i++) + "]", rows);
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

void emit(const Json& doc, const std::string& format, const std::string& out_path) {
    std::ostringstream body;
    if (format == "json") {
        body << doc.dump(2) << '\n';
    } else {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(doc, "", rows);
        for (const auto& [key, value] : rows) {
            if (format == "csv")
                body << key << ',' << value << '\n';
            else
                body << key << ": " << value << '\n';
        }
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw qhw::DomainError("cannot open output file '" + out_path + "'");
        f << body.str();
    }
}

Json header(const std::string& command, Json inputs) {
    return Json{{"command", command}, {"inputs", std::move(inputs)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for quantum weighted double Hurwitz numbers"};
    app.require_subcommand(1);

    std::string model_tag = "eprime", q_str, mu_str, nu_str, lambda_str, profiles_str;
    std::string var_str = "q", format = "json", out_path, claim, qs_str;
    int d = 0, n = 0;
    long order = 8;
    unsigned jobs = 1;
    bool strict = false, have_n = false, have_q = false, have_var = false;

    const CLI::Validator q_in_range(
        [](std::string& s) -> std::string {
            try {
                qhw::check_q(qhw::parse_rational(s));
            } catch (const std::exception& e) {
                return std::string(e.what());
            }
            return {};
        },
        "RATIONAL_IN_(0,1)");

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", out_path);
        cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
        cmd->add_flag("--strict", strict);
    };

    auto* c_partitions = app.add_subcommand("partitions", "enumerate integer partitions");
    c_partitions->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    add_common(c_partitions);

    auto* c_character = app.add_subcommand("character", "symmetric group character value");
    c_character->add_option("--lambda", lambda_str)->required();
    c_character->add_option("--mu", mu_str)->required();
    add_common(c_character);

    auto* c_hurwitz = app.add_subcommand("hurwitz", "pure Hurwitz number for a profile list");
    c_hurwitz->add_option("--profiles", profiles_str)->required();
    c_hurwitz->add_option("--n", n);
    add_common(c_hurwitz);

    auto* c_weight = app.add_subcommand("weight", "weight of a colength partition");
    c_weight->add_option("--model", model_tag);
    c_weight->add_option("--lambda", lambda_str)->required();
    c_weight->add_option("--q", q_str)->check(q_in_range);
    c_weight->add_option("--var", var_str)->check(CLI::IsMember({"q", "eps"}));
    c_weight->add_option("--order", order);
    add_common(c_weight);

    auto* c_pf = app.add_subcommand("partition-function", "weighted partition function");
    c_pf->add_option("--model", model_tag);
    c_pf->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    c_pf->add_option("--q", q_str)->check(q_in_range);
    c_pf->add_option("--n", n);
    add_common(c_pf);

    auto* c_measure = app.add_subcommand("measure", "colength or configuration measure");
    c_measure->add_option("--model", model_tag);
    c_measure->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    c_measure->add_option("--q", q_str)->check(q_in_range);
    c_measure->add_option("--n", n);
    add_common(c_measure);

    auto* c_wh = app.add_subcommand("weighted-hurwitz", "weighted double Hurwitz number");
    c_wh->add_option("--model", model_tag);
    c_wh->add_option("--d", d)->check(CLI::NonNegativeNumber);
    c_wh->add_option("--mu", mu_str)->required();
    c_wh->add_option("--nu", nu_str)->required();
    c_wh->add_option("--q", q_str)->check(q_in_range);
    c_wh->add_option("--var", var_str)->check(CLI::IsMember({"q", "eps"}));
    c_wh->add_option("--order", order);
    add_common(c_wh);

    auto* c_verify = app.add_subcommand("verify", "asymptotic claim verification");
    c_verify->add_option("--claim", claim)
        ->required()
        ->check(CLI::IsMember({"pf-semiclassical", "weight-semiclassical", "hurwitz-semiclassical",
                               "zero-temp-pf", "zero-temp-hurwitz", "phi-principal",
                               "phi-subprincipal", "tau-identity", "classical-limit",
                               "zero-temp-tau", "dirac", "all"}));
    c_verify->add_option("--model", model_tag);
    c_verify->add_option("--d", d);
    c_verify->add_option("--n", n);
    c_verify->add_option("--q", q_str)->check(q_in_range);
    c_verify->add_option("--qs", qs_str);
    c_verify->add_option("--mu", mu_str);
    c_verify->add_option("--nu", nu_str);
    c_verify->add_option("--lambda", lambda_str);
    c_verify->add_option("--order", order);
    add_common(c_verify);

    auto* c_tau = app.add_subcommand("tau", "tau-function coefficient slice");
    c_tau->add_option("--model", model_tag);
    c_tau->add_option("--q", q_str)->check(q_in_range);
    c_tau->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    c_tau->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
    add_common(c_tau);

    auto* c_dilog = app.add_subcommand("dilog-check", "quantum dilogarithm identities");
    c_dilog->add_option("--q", q_str)->required()->check(q_in_range);
    c_dilog->add_option("--order", order);
    add_common(c_dilog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    have_n = app.got_subcommand(c_hurwitz) ? c_hurwitz->count("--n") > 0
             : app.got_subcommand(c_pf)    ? c_pf->count("--n") > 0
             : app.got_subcommand(c_measure) ? c_measure->count("--n") > 0
                                             : false;
    have_q = !q_str.empty();
    have_var = (app.got_subcommand(c_weight) && c_weight->count("--var") > 0) ||
               (app.got_subcommand(c_wh) && c_wh->count("--var") > 0);

    try {
        qhw::set_parallel_jobs(jobs);
        const WeightModel model = WeightModel::parse(model_tag);
        std::optional<Rational> q;
        if (have_q) {
            q = qhw::parse_rational(q_str);
            qhw::check_q(*q);
        }
        bool mismatch = false;
        Json doc;

        if (app.got_subcommand(c_partitions)) {
            doc = header("partitions", Json{{"n", n}});
            Json list = Json::array();
            for (const Partition& p : qhw::enumerate_partitions(n)) list.push_back(p.str());
            doc["count"] = qhw::partition_count(n);
            doc["partitions"] = list;
        } else if (app.got_subcommand(c_character)) {
            const Partition lam = Partition::parse(lambda_str), mu = Partition::parse(mu_str);
            doc = header("character", Json{{"lambda", lam.str()}, {"mu", mu.str()}});
            doc["value"] = qhw::character(lam, mu).str();
        } else if (app.got_subcommand(c_hurwitz)) {
            const auto profiles = parse_profiles(profiles_str);
            if (have_n && profiles[0].weight() != n)
                throw qhw::DomainError("--n disagrees with profile weights");
            doc = header("hurwitz", Json{{"n", profiles[0].weight()}, {"profiles", profiles_str}});
            doc["value"] = qhw::rational_str(qhw::hurwitz(profiles));
        } else if (app.got_subcommand(c_weight)) {
            const Partition lam = Partition::parse(lambda_str);
            Json inputs{{"model", model.tag()}, {"lambda", lam.str()}};
            if (have_q) inputs["q"] = qhw::rational_str(*q);
            if (have_var) {
                inputs["var"] = var_str;
                inputs["order"] = order;
                doc = header("weight", inputs);
                const auto v = qhw::parse_var(var_str);
                doc["series"] = qhw::to_json(v == qhw::Var::q
                                                 ? qhw::weight_q_series(model, lam, order)
                                                 : qhw::weight_eps_series(model, lam, order));
            } else {
                doc = header("weight", inputs);
                doc["value"] = qhw::rational_str(qhw::weight_on_Pd(model, lam, q));
            }
        } else if (app.got_subcommand(c_pf)) {
            Json inputs{{"model", model.tag()}, {"d", d}};
            if (have_q) inputs["q"] = qhw::rational_str(*q);
            if (have_n) inputs["n"] = n;
            doc = header("partition-function", inputs);
            doc["value"] = qhw::rational_str(qhw::partition_function(
                d, model, q, have_n ? std::optional<int>(n) : std::nullopt));
        } else if (app.got_subcommand(c_measure)) {
            Json inputs{{"model", model.tag()}, {"d", d}};
            if (have_q) inputs["q"] = qhw::rational_str(*q);
            if (have_n) inputs["n"] = n;
            doc = header("measure", inputs);
            if (have_n)
                doc["measure"] = qhw::to_json(qhw::theta_measure(n, d, model, q));
            else
                doc["measure"] = qhw::to_json(qhw::xi_measure(d, model, q));
        } else if (app.got_subcommand(c_wh)) {
            const Partition mu = Partition::parse(mu_str), nu = Partition::parse(nu_str);
            Json inputs{{"model", model.tag()}, {"d", d}, {"mu", mu.str()}, {"nu", nu.str()}};
            if (have_var) {
                inputs["var"] = var_str;
                inputs["order"] = order;
                doc = header("weighted-hurwitz", inputs);
                doc["series"] = qhw::to_json(
                    qhw::weighted_hurwitz_series(d, model, qhw::parse_var(var_str), mu, nu, order));
            } else {
                if (have_q) inputs["q"] = qhw::rational_str(*q);
                doc = header("weighted-hurwitz", inputs);
                doc["value"] = qhw::rational_str(qhw::weighted_hurwitz(d, model, q, mu, nu));
            }
        } else if (app.got_subcommand(c_verify)) {
            Json inputs{{"claim", claim}, {"model", model.tag()}};
            if (d != 0) inputs["d"] = d;
            if (n != 0) inputs["n"] = n;
            if (have_q) inputs["q"] = qhw::rational_str(*q);
            doc = header("verify", inputs);
            auto finish = [&](const qhw::VerificationReport& rep) {
                doc["report"] = qhw::to_json(rep);
                if (!rep.all_ok()) mismatch = true;
            };
            if (claim == "pf-semiclassical") {
                finish(qhw::verify_pf_semiclassical(model, d, std::max(order, 1L)));
            } else if (claim == "weight-semiclassical") {
                finish(qhw::verify_weight_semiclassical(model, Partition::parse(lambda_str)));
            } else if (claim == "hurwitz-semiclassical") {
                finish(qhw::verify_hurwitz_semiclassical(model, d, Partition::parse(mu_str),
                                                         Partition::parse(nu_str)));
            } else if (claim == "zero-temp-pf") {
                finish(qhw::verify_zero_temp_pf(model, d));
            } else if (claim == "zero-temp-hurwitz") {
                finish(qhw::verify_zero_temp_hurwitz(model, d, Partition::parse(mu_str),
                                                     Partition::parse(nu_str)));
            } else if (claim == "phi-principal") {
                finish(qhw::verify_phi_principal(model, d));
            } else if (claim == "phi-subprincipal") {
                finish(qhw::verify_phi_subprincipal(model, d));
            } else if (claim == "tau-identity") {
                finish(qhw::verify_tau_identity(model, q, n, d));
            } else if (claim == "classical-limit") {
                finish(qhw::classical_limit_check(model, n, d));
            } else if (claim == "zero-temp-tau") {
                finish(qhw::zero_temp_tau_check(n, d));
            } else if (claim == "dirac") {
                if (qs_str.empty()) throw qhw::DomainError("--qs required for the dirac claim");
                const auto rep = qhw::dirac_convergence_check(
                    d, model, parse_rational_list(qs_str), Partition::parse(lambda_str));
                doc["report"] = qhw::to_json(rep);
                if (!rep.decreasing) mismatch = true;
            } else {  // all
                Json reports = Json::array();
                for (const auto& entry : qhw::claim_registry()) {
                    const auto rep = entry.run();
                    if (!rep.all_ok()) mismatch = true;
                    reports.push_back(qhw::to_json(rep));
                }
                doc["reports"] = reports;
            }
        } else if (app.got_subcommand(c_tau)) {
            Json inputs{{"model", model.tag()}, {"n", n}, {"d", d}};
            if (have_q) inputs["q"] = qhw::rational_str(*q);
            doc = header("tau", inputs);
            doc["slice"] = qhw::to_json(qhw::tau_coefficients(model, q, n, d));
        } else if (app.got_subcommand(c_dilog)) {
            doc = header("dilog-check", Json{{"q", qhw::rational_str(*q)}, {"order", order}});
            const auto rep = qhw::dilog_check(*q, order);
            doc["report"] = qhw::to_json(rep);
            if (!rep.all_ok()) mismatch = true;
        }

        emit(doc, format, out_path);
        return (strict && mismatch) ? 3 : 0;
    } catch (const qhw::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

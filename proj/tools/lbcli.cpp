#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lb/autact.hpp"
#include "lb/classify.hpp"
#include "lb/cohom.hpp"
#include "lb/json_io.hpp"

namespace {

using lb::json;

struct Options {
    std::string input;
    std::string label;
    std::string phi;
    std::string format = "text";
    int samples = 100;
    std::uint64_t seed = 12345;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

lb::CatalogLabel parse_label(const std::string& s) {
    std::string name = s;
    std::optional<lb::Rat> lambda;
    auto comma = s.find(',');
    if (comma != std::string::npos) {
        name = s.substr(0, comma);
        std::string rest = s.substr(comma + 1);
        if (rest.rfind("lambda=", 0) != 0)
            throw std::invalid_argument("expected lambda=p/q after comma in --label");
        lambda = lb::rat_parse(rest.substr(7));
    }
    return lb::CatalogLabel{lb::family_from_name(name), lambda};
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string residual_line(const std::string& name, bool zero) {
    return name + ": " + (zero ? "0" : "nonzero") + "\n";
}

int cmd_validate(const Options& opt) {
    auto [g, d] = lb::bialgebra_from_json(load_json(opt.input));
    bool jac = true;
    for (const lb::Vec& r : lb::check_jacobi(g))
        if (!lb::is_zero(r)) jac = false;
    bool coc = jac && lb::is_cocycle(g, d);
    bool coj = lb::is_cojacobi(g, d);
    json j;
    j["jacobi"] = jac ? "0" : "nonzero";
    j["cocycle"] = coc ? "0" : "nonzero";
    j["cojacobi"] = coj ? "0" : "nonzero";
    bool ok = jac && coc && coj;
    j["valid"] = ok;
    emit(opt, j,
         residual_line("jacobi", jac) + residual_line("cocycle", coc) +
             residual_line("cojacobi", coj) + std::string("valid: ") + (ok ? "yes" : "no") + "\n");
    return ok ? 0 : 1;
}

int cmd_invariants(const Options& opt) {
    auto [g, d] = lb::bialgebra_from_json(load_json(opt.input));
    lb::LieBialgebra b(g, d);
    lb::DerivationReport rep = lb::char_derivation(b);
    std::vector<lb::Vec> ker = lb::kernel_subalgebra(b);
    json j;
    j["derivation"] = lb::derivation_report_to_json(rep);
    json kj = json::array();
    for (const lb::Vec& v : ker) {
        json row = json::array();
        for (const lb::Rat& x : v) row.push_back(lb::rat_str(x));
        kj.push_back(row);
    }
    j["kernel_subalgebra"] = kj;
    std::string text = "trace: " + lb::rat_str(rep.trace) + "\ndet: " + lb::rat_str(rep.det) +
                       "\ndim ker delta: " + std::to_string(ker.size()) + "\n";
    if (g.label && (g.label->family == lb::Family::Su2 || g.label->family == lb::Family::Sl2R)) {
        lb::RMatrix r = lb::coboundary_preimage(g, d);
        lb::Rat s = lb::schouten_self_bracket(g, r);
        j["schouten"] = lb::rat_str(s);
        text += "schouten: " + lb::rat_str(s) + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_cohomology(const Options& opt) {
    lb::LieAlgebra g;
    if (!opt.label.empty()) {
        g = lb::catalog_build(parse_label(opt.label));
    } else {
        auto [ga, d] = lb::bialgebra_from_json(load_json(opt.input));
        g = ga;
    }
    lb::CohomologyReport rep = lb::h1_report(g);
    std::string text = "invariants: " + std::to_string(rep.dim_invariants) +
                       "\ncoboundaries: " + std::to_string(rep.dim_coboundaries) +
                       "\ncocycles: " + std::to_string(rep.dim_cocycles) +
                       "\nh1: " + std::to_string(rep.dim_h1) + "\n";
    emit(opt, lb::cohomology_report_to_json(rep), text);
    return 0;
}

int cmd_classify(const Options& opt) {
    auto [g, d] = lb::bialgebra_from_json(load_json(opt.input));
    lb::LieBialgebra b(g, d);
    lb::ClassTag t = g.dim == 2 ? lb::classify2(b) : lb::classify3(b);
    emit(opt, lb::tag_to_json(t), lb::tag_str(t) + "\n");
    return 0;
}

int cmd_act(const Options& opt) {
    auto [g, d] = lb::bialgebra_from_json(load_json(opt.input));
    lb::Mat phi = lb::mat_from_json(load_json(opt.phi));
    lb::Automorphism a(g, phi);
    lb::Cobracket dp = lb::pullback(a, d);
    json j = lb::bialgebra_to_json(g, dp);
    emit(opt, j, j.dump(2) + "\n");
    return 0;
}

int cmd_orbit_check(const Options& opt) {
    lb::OrbitCheckReport rep = lb::orbit_check(parse_label(opt.label), opt.samples, opt.seed);
    std::string text = "samples: " + std::to_string(rep.samples) +
                       "\nfailures: " + std::to_string(rep.failures) + "\n";
    for (const std::string& w : rep.witnesses) text += "witness: " + w + "\n";
    emit(opt, lb::orbit_report_to_json(rep), text);
    return rep.failures > 0 ? 1 : 0;
}

int cmd_catalog(const Options& opt) {
    lb::CatalogLabel label = parse_label(opt.label);
    lb::LieAlgebra g = lb::catalog_build(label);
    std::vector<lb::NormalForm> forms = lb::normal_form_catalog(label);
    json j;
    j["algebra"] = lb::algebra_to_json(g);
    json nf = json::array();
    std::string text = lb::label_str(label) + "\n";
    for (const lb::NormalForm& f : forms) {
        json e;
        e["tag"] = lb::tag_to_json(f.tag);
        e["cobracket"] = lb::mat_to_json(f.delta.m);
        nf.push_back(e);
        text += lb::tag_str(f.tag) + "\n";
    }
    j["normal_forms"] = nf;
    emit(opt, j, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and classification of low-dimensional Lie bialgebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "Check Jacobi, cocycle and co-Jacobi");
    validate->add_option("--input", opt.input, "Bialgebra JSON file")->required();
    add_common(validate);

    CLI::App* invariants = app.add_subcommand("invariants", "Characteristic derivation report");
    invariants->add_option("--input", opt.input, "Bialgebra JSON file")->required();
    add_common(invariants);

    CLI::App* cohomology = app.add_subcommand("cohomology", "H1 dimension report");
    cohomology->add_option("--label", opt.label, "Catalog label NAME[,lambda=p/q]");
    cohomology->add_option("--input", opt.input, "Bialgebra JSON file");
    add_common(cohomology);

    CLI::App* classify = app.add_subcommand("classify", "Isomorphism-class tag");
    classify->add_option("--input", opt.input, "Bialgebra JSON file")->required();
    add_common(classify);

    CLI::App* act = app.add_subcommand("act", "Pull a bialgebra back by an automorphism");
    act->add_option("--input", opt.input, "Bialgebra JSON file")->required();
    act->add_option("--phi", opt.phi, "Automorphism matrix JSON file")->required();
    add_common(act);

    CLI::App* orbit = app.add_subcommand("orbit-check", "Orbit-stability oracle");
    orbit->add_option("--label", opt.label, "Catalog label NAME[,lambda=p/q]")->required();
    orbit->add_option("--samples", opt.samples, "Automorphisms per representative");
    orbit->add_option("--seed", opt.seed, "Deterministic sampler seed (default 12345)");
    add_common(orbit);

    CLI::App* catalog = app.add_subcommand("catalog", "Algebra and normal-form listing");
    catalog->add_option("--label", opt.label, "Catalog label NAME[,lambda=p/q]")->required();
    add_common(catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(opt);
        if (app.got_subcommand(invariants)) return cmd_invariants(opt);
        if (app.got_subcommand(cohomology)) {
            if (opt.label.empty() && opt.input.empty()) {
                std::cerr << "cohomology requires --label or --input\n";
                return 2;
            }
            return cmd_cohomology(opt);
        }
        if (app.got_subcommand(classify)) return cmd_classify(opt);
        if (app.got_subcommand(act)) return cmd_act(opt);
        if (app.got_subcommand(orbit)) return cmd_orbit_check(opt);
        if (app.got_subcommand(catalog)) return cmd_catalog(opt);
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        // semantic failures (invalid bialgebra) → 1, IO/parse problems → 2
        if (msg.rfind("invalid bialgebra", 0) == 0 || msg == "not a coboundary" ||
            msg.rfind("algebra not in canonical basis", 0) == 0 ||
            msg == "recognition requires canonical basis")
            return 1;
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

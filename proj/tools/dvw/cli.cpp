// Copyright 2026 The dvworkbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "dv/duality.hpp"
#include "dv/error.hpp"
#include "dv/frame.hpp"
#include "dv/frame_constructions.hpp"
#include "dv/io/formats.hpp"
#include "dv/morphism.hpp"
#include "dv/s2ic/formula.hpp"
#include "dv/s2ic/search.hpp"
#include "dv/s2ic/semantics.hpp"
#include "dv/subordination.hpp"
#include "dv/topology.hpp"
#include "report.hpp"

namespace dvw {

namespace fs = std::filesystem;

namespace {

// Relative paths that do not exist are looked up in $DVW_FIXTURES.
fs::path resolve(const std::string& arg) {
    const fs::path p(arg);
    if (fs::exists(p) || p.is_absolute()) return p;
    if (const char* dir = std::getenv("DVW_FIXTURES"); dir != nullptr && *dir != '\0') {
        const fs::path alt = fs::path(dir) / p;
        if (fs::exists(alt)) return alt;
    }
    return p;
}

enum class Kind { algebra, space, frame, algebra_map, point_map };

std::vector<std::pair<std::string, std::string>> keyword_lines(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto colon = line.find(':');
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || colon == std::string::npos) continue;
        std::string key = line.substr(first, colon - first);
        std::string rest = line.substr(colon + 1);
        rest.erase(0, rest.find_first_not_of(" \t"));
        rest.erase(rest.find_last_not_of(" \t\r") + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        out.emplace_back(key, rest);
    }
    return out;
}

Kind kind_of(const fs::path& path) {
    const auto lines = keyword_lines(dv::io::read_file(path));
    if (lines.empty()) throw dv::InputError("'" + path.string() + "' is empty");
    const std::string& key = lines.front().first;
    if (key == "atoms") return Kind::algebra;
    if (key == "points") return Kind::space;
    if (key == "elements") return Kind::frame;
    if (key == "source" || key == "target") {
        for (const auto& [k, v] : lines) {
            if (k != "source") continue;
            const fs::path src = fs::path(v).is_absolute() ? fs::path(v) : path.parent_path() / v;
            switch (kind_of(src)) {
                case Kind::algebra:
                    return Kind::algebra_map;
                case Kind::space:
                    return Kind::point_map;
                default:
                    throw dv::InputError("source of '" + path.string() + "' is neither an algebra nor a space");
            }
        }
    }
    throw dv::InputError("cannot tell what '" + path.string() + "' describes from its first keyword '" + key + "'");
}

std::pair<std::string, std::string> header_names(const fs::path& path) {
    std::pair<std::string, std::string> out;
    for (const auto& [k, v] : keyword_lines(dv::io::read_file(path))) {
        if (k == "source") out.first = v;
        if (k == "target") out.second = v;
    }
    return out;
}

// b2.alg -> b2.dual.space
std::string dual_name(const std::string& file, const char* extension) {
    fs::path p(file);
    return (p.parent_path() / (p.stem().string() + ".dual" + extension)).string();
}

std::string axiom_witness(const dv::FiniteBooleanAlgebra& base, const dv::AxiomCheck& c) {
    static const char* const kA2[] = {"a", "b"};
    static const char* const kA3[] = {"a", "b", "c", "d"};
    static const char* const kA6[] = {"a", "c"};
    const char* const* names = kA3;
    if (c.axiom == dv::Axiom::A1 || c.axiom == dv::Axiom::A2 || c.axiom == dv::Axiom::A5 ||
        c.axiom == dv::Axiom::zero_dimensional) {
        names = kA2;
    } else if (c.axiom == dv::Axiom::A6) {
        names = kA6;
    }
    std::string out;
    for (std::size_t i = 0; i < c.witness.size() && i < 4; ++i) {
        if (!out.empty()) out += ", ";
        out += std::string(names[i]) + "=" + base.format(c.witness[i]);
    }
    return out;
}

dv::Classification parse_classification(const std::string& s) {
    for (auto c : {dv::Classification::none, dv::Classification::subordination, dv::Classification::contact,
                   dv::Classification::compingent, dv::Classification::de_vries,
                   dv::Classification::zero_dimensional_de_vries}) {
        if (s == dv::to_string(c)) return c;
    }
    if (s == "zero-dimensional") return dv::Classification::zero_dimensional_de_vries;
    throw dv::InputError("unknown class '" + s + "'");
}

std::string valuation_text(const dv::FiniteBooleanAlgebra& base, const dv::s2ic::AlgebraicValuation& v) {
    std::string out;
    for (const auto& [name, e] : v) {
        if (!out.empty()) out += ", ";
        out += "V(" + name + ")=" + base.compact_name(e);
    }
    return out.empty() ? "(no variables)" : out;
}

std::string valuation_text(const dv::FiniteSpace& x, const dv::s2ic::TopologicalValuation& v) {
    std::string out;
    for (const auto& [name, u] : v) {
        if (!out.empty()) out += ", ";
        out += "V(" + name + ")=" + x.format(u);
    }
    return out.empty() ? "(no variables)" : out;
}

int finish(Report& r, bool passed) {
    r.field("status", passed ? "verified" : "refuted");
    return passed ? kExitVerified : kExitRefuted;
}

struct Args {
    std::string file;
    std::string second;
    std::vector<std::string> files;
    std::string output;
    std::string require = "compingent";
    bool generate = false;
    bool emit = false;
    std::string space;
    std::string algebra;
    std::string valuation;
    std::string formula;
    unsigned max_atoms = 2;
    std::string model_class = "contact";
};

// Writes the payload to --output when given, otherwise leaves it in the report.
void deliver(Report& r, const Args& a, const std::string& key, const std::string& text) {
    if (a.output.empty()) {
        r.set_payload_only(true);
        r.payload(key, text);
        return;
    }
    std::ofstream out(a.output, std::ios::binary);
    if (!out || !(out << text)) throw dv::InputError("cannot write '" + a.output + "'");
    r.field("written", a.output);
}

int cmd_check_algebra(Report& r, const Args& a) {
    const auto alg = dv::io::read_algebra(resolve(a.file));
    const auto floor = parse_classification(a.require);
    const auto report = dv::check_axioms(alg);
    const auto cls = dv::classify(report, alg);
    r.field("file", a.file);
    r.field("atoms", std::to_string(alg.base().atom_count()));
    r.field("class", dv::to_string(cls));
    r.field("required", dv::to_string(floor));
    for (const auto& c : report.checks) r.check({dv::to_string(c.axiom), c.holds, axiom_witness(alg.base(), c)});
    return finish(r, dv::at_least(cls, floor));
}

int cmd_dualize(Report& r, const Args& a) {
    const auto alg = dv::io::read_algebra(resolve(a.file));
    const auto dual = dv::lambda_space(alg);
    r.field("points", std::to_string(dual.space.size()));
    deliver(r, a, "space", dv::io::format_space(dual.space));
    r.field("status", "verified");
    return kExitVerified;
}

int cmd_check_space(Report& r, const Args& a) {
    const auto x = dv::io::read_space(resolve(a.file), a.generate);
    r.field("file", a.file);
    r.field("points", std::to_string(x.size()));
    r.field("opens", std::to_string(x.opens().size()));
    r.verdict(dv::separation_report(x).to_verdict(), "separation");
    const auto dv_checks = dv::is_dv_space(x);
    r.verdict(dv_checks, "dV");
    r.verdict(dv::is_uv_space(x), "UV");
    r.field("dV-space", dv_checks.passed() ? "yes" : "no");
    return finish(r, dv_checks.passed());
}

int cmd_roundtrip(Report& r, const Args& a) {
    const fs::path p = resolve(a.file);
    dv::RoundtripInputs in;
    switch (kind_of(p)) {
        case Kind::algebra:
            in.algebra = dv::io::read_algebra(p);
            break;
        case Kind::space:
            in.space = dv::io::read_space(p);
            break;
        default:
            throw dv::InputError("roundtrip expects an algebra or a space file");
    }
    const auto v = dv::verify_duality_roundtrip(in);
    r.field("file", a.file);
    r.verdict(v);
    return finish(r, v.passed());
}

int cmd_morphism_check(Report& r, const Args& a) {
    const fs::path p = resolve(a.file);
    r.field("file", a.file);
    const Kind k = kind_of(p);
    if (k == Kind::algebra_map) {
        const auto h = dv::io::read_morphism(p);
        r.field("kind", "deVries morphism");
        const auto v = dv::check_devries_morphism(h);
        r.verdict(v, "morphism");
        if (!v.passed()) return finish(r, false);
        const auto lam = dv::check_lambda_map(h);
        r.verdict(lam, "lambda");
        dv::RoundtripInputs in;
        in.morphism = h;
        const auto rt = dv::verify_duality_roundtrip(in);
        r.verdict(rt);
        return finish(r, lam.passed() && rt.passed());
    }
    if (k == Kind::point_map) {
        const auto f = dv::io::read_point_map(p);
        r.field("kind", "dV-map");
        const auto v = dv::check_dv_map(f);
        r.verdict(v, "map");
        if (!v.passed()) return finish(r, false);
        const auto phi = dv::check_phi_map(f);
        r.verdict(phi, "phi");
        dv::RoundtripInputs in;
        in.map = f;
        const auto rt = dv::verify_duality_roundtrip(in);
        r.verdict(rt);
        return finish(r, phi.passed() && rt.passed());
    }
    throw dv::InputError("'" + a.file + "' is not a morphism or point map file");
}

int cmd_morphism_star(Report& r, const Args& a) {
    const fs::path pk = resolve(a.file);
    const fs::path ph = resolve(a.second);
    if (kind_of(pk) != Kind::algebra_map || kind_of(ph) != Kind::algebra_map) {
        throw dv::InputError("morphism star expects two algebra morphism files K H");
    }
    const auto k = dv::io::read_morphism(pk);
    const auto h = dv::io::read_morphism(ph);
    const auto kh = dv::star_compose(k, h);
    const auto v = dv::check_devries_morphism(kh);
    r.verdict(v, "star");
    deliver(r, a, "morphism", dv::io::format_morphism(kh, header_names(ph).first, header_names(pk).second));
    return finish(r, v.passed());
}

int cmd_morphism_dualize(Report& r, const Args& a) {
    const fs::path p = resolve(a.file);
    const auto [src, tgt] = header_names(p);
    const Kind k = kind_of(p);
    if (k == Kind::algebra_map) {
        const auto h = dv::io::read_morphism(p);
        const auto f = dv::lambda_map(h);
        deliver(r, a, "map", dv::io::format_point_map(f, dual_name(tgt, ".space"), dual_name(src, ".space")));
    } else if (k == Kind::point_map) {
        const auto f = dv::io::read_point_map(p);
        const auto h = dv::phi_map(f);
        deliver(r, a, "morphism", dv::io::format_morphism(h, dual_name(tgt, ".alg"), dual_name(src, ".alg")));
    } else {
        throw dv::InputError("'" + a.file + "' is not a morphism or point map file");
    }
    r.field("status", "verified");
    return kExitVerified;
}

int cmd_frame_check(Report& r, const Args& a) {
    const auto l = dv::io::read_frame(resolve(a.file));
    const auto rep = dv::check_frame(l);
    r.field("file", a.file);
    r.field("elements", std::to_string(l.size()));
    r.verdict(rep.to_verdict());
    r.field("compact-regular", rep.compact_regular() ? "yes" : "no");
    return finish(r, rep.compact_regular());
}

int cmd_frame_booleanize(Report& r, const Args& a) {
    const auto b = dv::booleanization(dv::io::read_frame(resolve(a.file)));
    r.field("class", dv::to_string(dv::classify(b.algebra)));
    deliver(r, a, "algebra", dv::io::format_algebra(b.algebra));
    r.field("status", "verified");
    return kExitVerified;
}

int cmd_frame_ideals(Report& r, const Args& a) {
    const auto n = dv::round_ideal_frame(dv::io::read_algebra(resolve(a.file)));
    r.field("elements", std::to_string(n.frame.size()));
    deliver(r, a, "frame", dv::io::format_frame(n.frame));
    r.field("status", "verified");
    return kExitVerified;
}

int cmd_frame_space(Report& r, const Args& a, bool xi) {
    const auto l = dv::io::read_frame(resolve(a.file));
    const auto x = xi ? dv::xi_space(l) : dv::uv_space(l);
    r.field("points", std::to_string(x.size()));
    deliver(r, a, "space", dv::io::format_space(x));
    r.field("status", "verified");
    return kExitVerified;
}

int cmd_frame_gur(Report& r, const Args& a) {
    const fs::path p = resolve(a.file);
    r.field("file", a.file);
    dv::Verdict v;
    switch (kind_of(p)) {
        case Kind::frame: {
            const auto l = dv::io::read_frame(p);
            v.merge(dv::verify_gur_frame(l), "gur");
            v.merge(dv::verify_xi_uv(l), "xi-uv");
            v.merge(dv::verify_chfis(l), "chfis");
            break;
        }
        case Kind::algebra: {
            const auto alg = dv::io::read_algebra(p);
            v.merge(dv::verify_gur_algebra(alg), "gur");
            v.merge(dv::verify_round_iso(alg), "round");
            break;
        }
        default:
            throw dv::InputError("frame gur expects a frame or an algebra file");
    }
    r.verdict(v);
    return finish(r, v.passed());
}

int cmd_product(Report& r, const Args& a) {
    std::vector<dv::FiniteSpace> spaces;
    for (const auto& f : a.files) spaces.push_back(dv::io::read_space(resolve(f)));
    const auto p = dv::choice_free_product(spaces);
    r.field("factors", std::to_string(spaces.size()));
    r.field("coproduct-elements", std::to_string(p.coproduct.size()));
    r.field("points", std::to_string(p.space.size()));
    r.field("opens", std::to_string(p.space.opens().size()));
    r.verdict(p.verdict);
    if (a.emit) r.payload("space", dv::io::format_space(p.space));
    return finish(r, p.verdict.passed());
}

int cmd_s2ic_check(Report& r, const Args& a) {
    const auto x = dv::io::read_space(resolve(a.space));
    const auto f = dv::s2ic::parse(a.formula);
    r.field("formula", dv::s2ic::to_string(f));
    if (!a.valuation.empty()) {
        const auto v = dv::io::parse_topological_valuation(dv::io::read_file(resolve(a.valuation)), x);
        const auto value = dv::s2ic::eval_topological(x, v, f);
        r.field("valuation", valuation_text(x, v));
        r.field("value", x.format(value));
        return finish(r, value == x.full());
    }
    const auto res = dv::s2ic::is_valid_on_space(x, f);
    r.field("valuations", std::to_string(res.valuations_checked));
    r.field("result", res.valid ? "valid" : "invalid");
    if (!res.valid) {
        r.field("countervaluation", valuation_text(x, *res.countervaluation));
        r.field("value", x.format(res.counter_value));
    }
    return finish(r, res.valid);
}

int cmd_s2ic_countermodel(Report& r, const Args& a, unsigned jobs) {
    const auto f = dv::s2ic::parse(a.formula);
    const auto cls = dv::s2ic::parse_model_class(a.model_class);
    const auto res = dv::s2ic::countermodel_search(f, a.max_atoms, cls, jobs);
    r.field("formula", dv::s2ic::to_string(f));
    r.field("class", dv::s2ic::to_string(cls));
    r.field("max-atoms", std::to_string(a.max_atoms));
    r.field("tables", std::to_string(res.tables_examined));
    if (!res.countermodel) {
        r.field("result", "exhausted at bound " + std::to_string(a.max_atoms));
        return finish(r, true);
    }
    const auto& m = *res.countermodel;
    r.field("result", "countermodel");
    r.field("atoms", std::to_string(m.algebra.base().atom_count()));
    r.field("algebra-class", dv::to_string(dv::classify(m.algebra)));
    r.payload("table", dv::io::format_algebra(m.algebra));
    r.field("valuation", valuation_text(m.algebra.base(), m.valuation));
    r.field("value", m.algebra.base().compact_name(m.value));
    return finish(r, false);
}

int cmd_s2ic_agree(Report& r, const Args& a) {
    const auto alg = dv::io::read_algebra(resolve(a.algebra));
    const auto f = dv::s2ic::parse(a.formula);
    const auto res = dv::s2ic::semantics_agreement(alg, f);
    r.field("formula", dv::s2ic::to_string(f));
    r.field("valuations", std::to_string(res.valuations_checked));
    r.verdict(res.verdict);
    return finish(r, res.verdict.passed());
}

int cmd_s2ic_eval(Report& r, const Args& a) {
    const auto f = dv::s2ic::parse(a.formula);
    r.field("formula", dv::s2ic::to_string(f));
    if (a.algebra.empty() == a.space.empty()) throw dv::InputError("s2ic eval needs exactly one of --algebra, --space");
    const std::string text = dv::io::read_file(resolve(a.valuation));
    if (!a.algebra.empty()) {
        const auto alg = dv::io::read_algebra(resolve(a.algebra));
        const auto v = dv::io::parse_algebraic_valuation(text, alg.base());
        const auto value = dv::s2ic::eval_algebraic(alg, v, f);
        r.field("valuation", valuation_text(alg.base(), v));
        r.field("value", alg.base().compact_name(value));
        return finish(r, value == alg.base().top());
    }
    const auto x = dv::io::read_space(resolve(a.space));
    const auto v = dv::io::parse_topological_valuation(text, x);
    const auto value = dv::s2ic::eval_topological(x, v, f);
    r.field("valuation", valuation_text(x, v));
    r.field("value", x.format(value));
    return finish(r, value == x.full());
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-model workbench for choice-free de Vries duality", "dvw"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    unsigned jobs = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "kv"}));
    app.add_option("--jobs", jobs, "Worker threads for searches")->check(CLI::Range(1U, 256U));

    Args a;
    std::function<int(Report&)> run;
    auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<int(Report&)> fn) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->callback([&run, fn] { run = fn; });
        return sub;
    };
    auto with_output = [&](CLI::App* sub) { sub->add_option("-o,--output", a.output, "Write the result to a file"); };

    auto* s = verb(&app, "check-algebra", "Check A1-A7 and classify an algebra", [&](Report& r) { return cmd_check_algebra(r, a); });
    s->add_option("file", a.file)->required();
    s->add_option("--require", a.require, "Class needed for exit status 0");

    s = verb(&app, "dualize", "Print the dual filter space of an algebra", [&](Report& r) { return cmd_dualize(r, a); });
    s->add_option("file", a.file)->required();
    with_output(s);

    s = verb(&app, "check-space", "Separation axioms, dV- and UV-space conditions", [&](Report& r) { return cmd_check_space(r, a); });
    s->add_option("file", a.file)->required();
    s->add_flag("--generate", a.generate, "Treat open lines as a subbasis");

    s = verb(&app, "roundtrip", "Verify the object round trip of an algebra or space", [&](Report& r) { return cmd_roundtrip(r, a); });
    s->add_option("file", a.file)->required();

    auto* morph = app.add_subcommand("morphism", "Morphisms and dV-maps");
    morph->require_subcommand(1);
    s = verb(morph, "check", "Validate a morphism or point map and its dual", [&](Report& r) { return cmd_morphism_check(r, a); });
    s->add_option("file", a.file)->required();
    s = verb(morph, "star", "Compose K after H with the star composition", [&](Report& r) { return cmd_morphism_star(r, a); });
    s->add_option("outer", a.file, "Morphism K applied second")->required();
    s->add_option("inner", a.second, "Morphism H applied first")->required();
    with_output(s);
    s = verb(morph, "dualize", "Print the dual of a morphism or point map", [&](Report& r) { return cmd_morphism_dualize(r, a); });
    s->add_option("file", a.file)->required();
    with_output(s);

    auto* frame = app.add_subcommand("frame", "Finite frames");
    frame->require_subcommand(1);
    s = verb(frame, "check", "Frame, compactness and regularity", [&](Report& r) { return cmd_frame_check(r, a); });
    s->add_option("file", a.file)->required();
    s = verb(frame, "booleanize", "Print the Booleanization with rather-below", [&](Report& r) { return cmd_frame_booleanize(r, a); });
    s->add_option("file", a.file)->required();
    with_output(s);
    s = verb(frame, "ideals", "Print the frame of round ideals of an algebra", [&](Report& r) { return cmd_frame_ideals(r, a); });
    s->add_option("file", a.file)->required();
    with_output(s);
    s = verb(frame, "xi", "Print the space of non-top elements with the check topology", [&](Report& r) { return cmd_frame_space(r, a, true); });
    s->add_option("file", a.file)->required();
    with_output(s);
    s = verb(frame, "uv", "Print the upper Vietoris space", [&](Report& r) { return cmd_frame_space(r, a, false); });
    s->add_option("file", a.file)->required();
    with_output(s);
    s = verb(frame, "gur", "Verify the frame/algebra isomorphisms for a frame or algebra file", [&](Report& r) { return cmd_frame_gur(r, a); });
    s->add_option("file", a.file)->required();

    s = verb(&app, "product", "Choice-free product of finite discrete spaces", [&](Report& r) { return cmd_product(r, a); });
    s->add_option("files", a.files);
    s->add_flag("--emit", a.emit, "Also print the product space");

    auto* logic = app.add_subcommand("s2ic", "Strict implication formulas");
    logic->require_subcommand(1);
    s = verb(logic, "check", "Validity on a dV-space, or one valuation", [&](Report& r) { return cmd_s2ic_check(r, a); });
    s->add_option("formula", a.formula)->required();
    s->add_option("--space", a.space)->required();
    s->add_option("--valuation", a.valuation, "Valuation file with 'val: p open: x y' lines");
    s = verb(logic, "countermodel", "Search for a finite algebraic countermodel", [&](Report& r) { return cmd_s2ic_countermodel(r, a, jobs); });
    s->add_option("formula", a.formula)->required();
    s->add_option("--max-atoms", a.max_atoms, "Largest atom count searched");
    s->add_option("--class", a.model_class, "subordination, contact or compingent");
    s = verb(logic, "agree", "Compare algebraic and spatial semantics", [&](Report& r) { return cmd_s2ic_agree(r, a); });
    s->add_option("formula", a.formula)->required();
    s->add_option("--algebra", a.algebra)->required();
    s = verb(logic, "eval", "Evaluate under one valuation", [&](Report& r) { return cmd_s2ic_eval(r, a); });
    s->add_option("formula", a.formula)->required();
    s->add_option("--algebra", a.algebra);
    s->add_option("--space", a.space);
    s->add_option("--valuation", a.valuation)->required();

    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& t = args[i];
        if (t == "--format" || t == "--jobs") {
            ++i;
            continue;
        }
        if (t.empty() || t[0] == '-') continue;
        const auto& subs = app.get_subcommands({});
        if (std::none_of(subs.begin(), subs.end(), [&](const CLI::App* c) { return c->get_name() == t; })) {
            err << "dvw: error: unknown verb '" << t << "'\n";
            return kExitInputError;
        }
        break;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitVerified : kExitInputError;
    }

    Report report(format == "kv" ? Format::kv : Format::text);
    try {
        const int code = run(report);
        report.write(out);
        return code;
    } catch (const dv::Error& e) {
        err << "dvw: error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "dvw: error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace dvw

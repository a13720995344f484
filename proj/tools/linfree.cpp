// linfree command-line tool. Exit codes: 0 pass, 1 domain failure,
// 2 input failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linfree/linfree.hpp"

namespace {

using namespace linfree;

constexpr const char* kVersion = "0.1.0";
constexpr int kPass = 0, kDomain = 1, kInput = 2;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// RunReport: written with --report; timings only with --timings so that
// reports stay byte-identical across runs.
struct RunReport {
    std::string command;
    std::string input_digest;
    json verdicts = json::object();
    std::optional<std::uint64_t> seed;
    std::optional<double> millis;

    json to_json() const {
        json j = {{"command", command}, {"input_digest", input_digest}, {"verdicts", verdicts}, {"version", kVersion}};
        j["seed"] = seed ? json(*seed) : json(nullptr);
        if (millis) j["timings"] = {{"total_ms", *millis}};
        return j;
    }
};

struct Common {
    std::string report_path;
    bool timings = false;
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) std::cout << text;
    else write_file(out, text);
}

int finish(const Common& co, RunReport& r, std::chrono::steady_clock::time_point t0, int code) {
    if (co.timings)
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!co.report_path.empty()) write_file(co.report_path, r.to_json().dump(2) + "\n");
    return code;
}

std::vector<VertexId> parse_id_list(const std::string& s) {
    std::vector<VertexId> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw parse_error("");
        } catch (...) {
            throw parse_error("bad vertex id list '" + s + "'");
        }
    }
    return out;
}

// ------------------------------------------------------------- validate

int cmd_validate(const std::string& file, const Common& co) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r{"validate", "", {}, {}, {}};
    std::string text = read_file(file);
    r.input_digest = fnv1a_hex(text);
    auto e = embedding_from_json(parse_json_text(text));
    auto rep = validate_embedding(e);
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    std::cout << (rep.valid() ? "valid" : "invalid") << "\n";
    r.verdicts = {{"valid", rep.valid()}, {"violations", rep.violations}};
    return finish(co, r, t0, rep.valid() ? kPass : kDomain);
}

// ---------------------------------------------------------------- check

int cmd_check(const std::string& file, const std::string& out, const Common& co) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r{"check", "", {}, {}, {}};
    std::string text = read_file(file);
    r.input_digest = fnv1a_hex(text);
    auto e = embedding_from_json(parse_json_text(text));
    CertifyResult res;
    try {
        res = certify(e);
    } catch (const precondition_error& ex) {
        std::cout << "precondition failed: " << ex.what() << "\n";
        r.verdicts = {{"verdict", "precondition_failed"}, {"reason", ex.what()}};
        return finish(co, r, t0, kDomain);
    }
    if (auto* inc = std::get_if<Inconclusive>(&res)) {
        emit(out, json{{"verdict", "inconclusive"}, {"reason", inc->reason}}.dump(2) + "\n");
        std::cout << "inconclusive: " << inc->reason << "\n";
        r.verdicts = {{"verdict", "inconclusive"}, {"reason", inc->reason}};
        return finish(co, r, t0, kDomain);
    }
    const auto& cert = std::get<FreenessCertificate>(res);
    auto rc = recheck_certificate(e, cert);
    r.verdicts = {{"verdict", "free"}, {"recheck", rc.ok()}, {"additions", cert.additions.size()}};
    if (!rc.ok()) {
        for (const auto& f : rc.failures) std::cerr << "recheck: " << f << "\n";
        std::cout << "certificate failed re-check\n";
        return finish(co, r, t0, kDomain);
    }
    emit(out, certificate_to_json(cert).dump(2) + "\n");
    if (!out.empty()) std::cout << "free (certificate re-checked, " << cert.additions.size() << " additions)\n";
    return finish(co, r, t0, kPass);
}

int cmd_recheck(const std::string& file, const std::string& cert_file, const Common& co) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r{"recheck", "", {}, {}, {}};
    std::string text = read_file(file), ctext = read_file(cert_file);
    r.input_digest = fnv1a_hex(text + ctext);
    auto e = embedding_from_json(parse_json_text(text));
    auto cert = certificate_from_json(parse_json_text(ctext));
    auto rc = recheck_certificate(e, cert);
    for (const auto& f : rc.failures) std::cout << "failure: " << f << "\n";
    std::cout << (rc.ok() ? "certificate ok" : "certificate rejected") << "\n";
    r.verdicts = {{"ok", rc.ok()}, {"failures", rc.failures}};
    return finish(co, r, t0, rc.ok() ? kPass : kDomain);
}

// ------------------------------------------------------------ invariant

int cmd_invariant(const std::string& kind, const std::string& file, const std::vector<std::string>& cycle_specs,
                  const std::string& dump, const Common& co) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r{"invariant " + kind, "", {}, {}, {}};
    std::string text = read_file(file);
    r.input_digest = fnv1a_hex(text);
    json j = parse_json_text(text);

    if (kind == "cg") {
        if (!dump.empty()) throw parse_error("--dump-diagram applies to lk and det only");
        auto e = embedding_from_json(j);
        if (!is_complete_on(e.graph, 6)) {
            std::cout << "cg needs a K6 embedding\n";
            return finish(co, r, t0, kDomain);
        }
        auto rep = validate_embedding(e);
        if (!rep.valid()) {
            std::cout << "invalid embedding: " << rep.violations.front() << "\n";
            return finish(co, r, t0, kDomain);
        }
        int cg = conway_gordon_sum(e);
        std::cout << cg << "\n";
        r.verdicts = {{"cg", cg}};
        return finish(co, r, t0, kPass);
    }

    std::vector<PolygonalCycle> cycles;
    if (j.is_object() && j.contains("cycles")) {
        cycles = cycles_from_json(j);
    } else {
        auto e = embedding_from_json(j);
        for (const auto& s : cycle_specs) {
            auto ids = parse_id_list(s);
            for (auto v : ids)
                if (!e.graph.contains(v)) throw parse_error("unknown vertex id " + std::to_string(v));
            cycles.push_back(cycle_of(e, ids));
        }
    }
    std::size_t need = kind == "lk" ? 2 : 1;
    if (cycles.size() != need)
        throw parse_error(kind + " needs " + std::to_string(need) + " cycle(s), got " + std::to_string(cycles.size()));
    Diagram d = build_diagram(cycles, generic_direction(cycles));
    if (!dump.empty()) write_file(dump, diagram_to_json(d).dump(2) + "\n");
    if (kind == "lk") {
        long lk = linking_number(d);
        std::cout << lk << "\n";
        r.verdicts = {{"lk", lk}};
    } else {
        Integer det = knot_determinant(d);
        std::cout << det.get_str() << "\n";
        r.verdicts = {{"det", det.get_str()}};
    }
    return finish(co, r, t0, kPass);
}

// ------------------------------------------------------------- generate

int cmd_generate(const std::string& family, int n, std::uint64_t seed, const std::string& out, const Common& co) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r{"generate " + family, fnv1a_hex(family + ":" + std::to_string(n)), {}, seed, {}};
    GeneratedInstance inst;
    try {
        if (family == "thm3") {
            Thm3Params p;
            p.n = n;
            p.seed = seed;
            inst = theorem3_graph(p);
        } else {
            Thm4Params p;
            p.n = n;
            p.seed = seed;
            inst = theorem4_graph(p);
        }
    } catch (const error& ex) {
        std::cout << "generation failed: " << ex.what() << "\n";
        r.verdicts = {{"valid", false}, {"reason", ex.what()}};
        return finish(co, r, t0, kDomain);
    }
    emit(out, generation_to_json(family, inst).dump(2) + "\n");
    const auto& rep = inst.report;
    if (!out.empty()) {
        std::cout << family << " n=" << n << ": " << rep.vertex_count << " vertices, " << rep.edge_count
                  << " edges, det " << rep.determinant.get_str();
        if (rep.min_valency) std::cout << ", min valency " << *rep.min_valency;
        if (rep.vertex_connectivity) std::cout << ", connectivity " << *rep.vertex_connectivity;
        std::cout << "\n";
    }
    r.verdicts = {{"valid", rep.valid}, {"vertex_count", rep.vertex_count}, {"determinant", rep.determinant.get_str()}};
    return finish(co, r, t0, rep.valid ? kPass : kDomain);
}

// --------------------------------------------------------------- sample

int cmd_sample(const std::string& graph, int n, long count, long bound, std::uint64_t seed, std::string check,
               const std::string& out, const Common& co) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r{"sample " + graph, fnv1a_hex(graph + ":" + std::to_string(n) + ":" + std::to_string(count) + ":" +
                                             std::to_string(bound)),
                {}, seed, {}};
    std::vector<AbstractGraph> graphs;
    if (graph == "k4") graphs = {complete_graph(4)};
    else if (graph == "k5") graphs = {complete_graph(5)};
    else if (graph == "k6") graphs = {complete_graph(6)};
    else graphs = enumerate_graphs(n, 3);
    if (check == "auto") check = graph == "k6" ? "cg" : "freeness";
    if (check == "cg" && graph != "k6") throw parse_error("--check=cg needs graph k6");

    long pass = 0, total = 0;
    std::optional<std::uint64_t> first_fail;
    std::string fail_reason;
    std::uint64_t job = 0;
    for (const auto& g : graphs)
        for (long i = 0; i < count; ++i, ++job) {
            std::uint64_t s = derive_seed(seed, job);
            ++total;
            std::string why;
            try {
                auto e = sample_embedding(g, bound, s);
                if (check.empty()) {
                    ++pass;
                    continue;
                }
                if (check == "cg") {
                    int cg = conway_gordon_sum(e);
                    if (cg == 1) ++pass;
                    else why = "Conway-Gordon sum " + std::to_string(cg);
                } else {
                    auto res = certify(e);
                    if (auto* c = std::get_if<FreenessCertificate>(&res)) {
                        auto rc = recheck_certificate(e, *c);
                        if (rc.ok()) ++pass;
                        else why = "certificate re-check: " + rc.failures.front();
                    } else {
                        why = "inconclusive: " + std::get<Inconclusive>(res).reason;
                    }
                }
            } catch (const error& ex) {
                why = std::string("sampler error: ") + ex.what();
            }
            if (!why.empty() && !first_fail) {
                first_fail = s;
                fail_reason = why;
            }
        }
    std::cout << pass << "/" << total << " pass";
    if (!check.empty()) std::cout << " (check " << check << ")";
    std::cout << "\n";
    if (first_fail) std::cout << "first failing seed: " << *first_fail << " (" << fail_reason << ")\n";
    r.verdicts = {{"pass", pass}, {"total", total}, {"check", check}};
    if (first_fail) r.verdicts["first_failing_seed"] = *first_fail;
    if (!out.empty()) write_file(out, r.to_json().dump(2) + "\n");
    return finish(co, r, t0, first_fail ? kDomain : kPass);
}

// ----------------------------------------------------------- export-obj

int cmd_export_obj(const std::string& file, const std::string& out, bool rational, const Common& co) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r{"export-obj", "", {}, {}, {}};
    LinearEmbedding e;
    try {
        std::string text = read_file(file);
        r.input_digest = fnv1a_hex(text);
        e = embedding_from_json(parse_json_text(text));
    } catch (const parse_error& ex) {
        std::cout << "cannot read embedding: " << ex.what() << "\n";
        return finish(co, r, t0, kDomain);
    }
    auto rep = validate_embedding(e);
    if (!rep.valid()) {
        std::cout << "invalid embedding: " << rep.violations.front() << "\n";
        return finish(co, r, t0, kDomain);
    }
    std::ostringstream obj;
    std::map<VertexId, std::size_t> index;
    for (auto v : e.graph.vertices()) {
        index[v] = index.size() + 1;
        const auto& p = e.at(v);
        obj << "v " << format_decimal(p.x) << " " << format_decimal(p.y) << " " << format_decimal(p.z) << "\n";
    }
    for (const auto& [a, b] : e.graph.edges()) obj << "l " << index[a] << " " << index[b] << "\n";
    emit(out, obj.str());
    if (rational) {
        std::string jpath = out.empty() ? std::string("export.json") : out + ".json";
        write_file(jpath, embedding_to_json(e).dump(2) + "\n");
    }
    r.verdicts = {{"vertices", e.graph.order()}, {"edges", e.graph.edges().size()}};
    return finish(co, r, t0, kPass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact freeness certification and non-free constructions for linear spatial graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Common co;
    app.add_option("--report", co.report_path, "write a JSON run report here");
    app.add_flag("--timings", co.timings, "include wall-clock timings in the run report");

    std::string file, out, kind, family, graph, dump, cert_file, check;
    std::vector<std::string> cycles;
    int n = 0;
    long count = 100, bound = 100;
    std::uint64_t seed = 0;
    bool rational = false;

    auto* validate = app.add_subcommand("validate", "check an embedding file for general position");
    validate->add_option("file", file)->required();

    auto* chk = app.add_subcommand("check", "certify freeness of an embedding (|V| <= 6, min valency >= 3)");
    chk->add_option("file", file)->required();
    chk->add_option("--out", out, "certificate path (default stdout)");

    auto* rchk = app.add_subcommand("recheck", "independently re-verify a certificate");
    rchk->add_option("file", file)->required();
    rchk->add_option("certificate", cert_file)->required();

    auto* inv = app.add_subcommand("invariant", "linking number, knot determinant or Conway-Gordon sum");
    inv->add_option("kind", kind)->required()->check(CLI::IsMember({"lk", "det", "cg"}));
    inv->add_option("file", file)->required();
    inv->add_option("--cycle", cycles, "comma-separated vertex ids of a cycle in an embedding file (repeatable)");
    inv->add_option("--dump-diagram", dump, "write the crossing diagram as JSON");

    auto* gen = app.add_subcommand("generate", "build a verified non-free family member");
    gen->add_option("family", family)->required()->check(CLI::IsMember({"thm3", "thm4"}));
    gen->add_option("--n", n, "family parameter")->required();
    gen->add_option("--seed", seed);
    gen->add_option("--out", out, "instance path (default stdout)");

    auto* smp = app.add_subcommand("sample", "seeded random embeddings, optionally verified");
    smp->add_option("graph", graph)->required()->check(CLI::IsMember({"k4", "k5", "k6", "enumerated"}));
    smp->add_option("--n", n, "vertex count for enumerated graphs")->default_val(6);
    smp->add_option("--count", count, "embeddings per graph")->check(CLI::NonNegativeNumber);
    smp->add_option("--bound", bound, "coordinate bound");
    smp->add_option("--seed", seed);
    smp->add_flag("--check{auto}", check, "verify each sample: cg, freeness or auto")
        ->check(CLI::IsMember({"auto", "cg", "freeness"}));
    smp->add_option("--out", out, "write the summary as JSON");

    auto* obj = app.add_subcommand("export-obj", "write an OBJ polyline file");
    obj->add_option("file", file)->required();
    obj->add_option("--out", out, "OBJ path (default stdout)");
    obj->add_flag("--rational", rational, "also write the exact JSON embedding to <out>.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? kPass : kInput;
    }

    try {
        if (*validate) return cmd_validate(file, co);
        if (*chk) return cmd_check(file, out, co);
        if (*rchk) return cmd_recheck(file, cert_file, co);
        if (*inv) return cmd_invariant(kind, file, cycles, dump, co);
        if (*gen) return cmd_generate(family, n, seed, out, co);
        if (*smp) return cmd_sample(graph, n, count, bound, seed, check, out, co);
        if (*obj) return cmd_export_obj(file, out, rational, co);
    } catch (const parse_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kInput;
    } catch (const error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kDomain;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kDomain;
    }
    return kInput;
}

// Acceptance sweep: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace linfree;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << detail << std::endl;
    if (!ok) ++failures;
}

std::vector<LinearEmbedding> k6_samples() {
    std::vector<LinearEmbedding> out;
    for (std::uint64_t i = 0; i < 500; ++i) out.push_back(sample_embedding(complete_graph(6), 100, derive_seed(2024, i)));
    return out;
}

AbstractGraph labels_k6() {
    std::vector<Edge> es;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) es.emplace_back(a, b);
    return AbstractGraph({1, 2, 3, 4, 5, 6}, es);
}

}  // namespace

int main() {
    auto t_all = clock_type::now();
    auto t0 = clock_type::now();
    auto samples = k6_samples();

    // 1
    {
        int ones = 0;
        for (const auto& e : samples) ones += conway_gordon_sum(e) == 1;
        double s = seconds_since(t0);
        std::ostringstream d;
        d << ones << "/500 with sum 1 in " << s << "s";
        report(1, "Conway-Gordon sum on 500 sampled K6", ones == 500 && s < 60, d.str());
    }

    std::vector<CanonicalLabeling> labs;
    // 2
    {
        int ok = 0;
        for (const auto& e : samples) {
            auto lab = canonical_labeling(e);
            labs.push_back(lab);
            std::array<Point3, 6> p;
            for (int l = 1; l <= 6; ++l) p[static_cast<std::size_t>(l - 1)] = e.at(lab.vertex(l));
            bool hopf = std::labs(oracle::disk_linking({p[0], p[1], p[2]}, PolygonalCycle{{p[3], p[4], p[5]}})) == 1;
            ok += evaluate_labeling(p).all() && hopf;
        }
        report(2, "canonical labeling re-verifies", ok == 500, std::to_string(ok) + "/500");
    }

    // 3
    {
        int ok = 0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            auto h = trivial_hulls(samples[i], labs[i]);
            bool good = !h.contains(1, 2, 3) && !h.contains(4, 5, 6);
            for (const auto& t : guaranteed_trivial_triangles()) good = good && h.contains(t);
            ok += good;
        }
        report(3, "trivial hulls contain the guaranteed 12, exclude 123 and 456", ok == 500, std::to_string(ok) + "/500");
    }

    // 4 and 10
    std::vector<std::pair<LinearEmbedding, FreenessCertificate>> certs;
    {
        std::vector<AbstractGraph> classes = enumerate_graphs(6, 3);
        for (const auto& g : enumerate_graphs(5, 3)) classes.push_back(g);
        classes.push_back(complete_graph(4));
        long free = 0, inconclusive = 0, rejected = 0, total = 0;
        std::uint64_t job = 0;
        for (const auto& g : classes)
            for (int k = 0; k < 100; ++k, ++job) {
                auto e = sample_embedding(g, 100, derive_seed(77, job));
                ++total;
                auto r = certify(e);
                if (auto* c = std::get_if<FreenessCertificate>(&r)) {
                    ++free;
                    if (!recheck_certificate(e, *c).ok()) ++rejected;
                    if (certs.size() < 1000) certs.emplace_back(e, *c);
                } else {
                    ++inconclusive;
                }
            }
        std::ostringstream d;
        d << classes.size() << " classes, " << free << "/" << total << " free, " << inconclusive << " inconclusive, "
          << rejected << " rejected by re-checker";
        report(4, "every qualifying graph class certifies free", free == total && inconclusive == 0 && rejected == 0,
               d.str());
    }

    // 5
    {
        auto t5 = clock_type::now();
        auto hulls = guaranteed_hull_set();
        auto cycles = hamiltonian_cycles(labels_k6());
        int closing = 0;
        for (const auto& c : cycles) closing += build_isotopy_graph(c, hulls).closes();
        bool standard = build_isotopy_graph({1, 2, 3, 4, 5, 6}, hulls).connected();
        auto other = build_isotopy_graph({1, 2, 6, 3, 5, 4}, hulls);
        bool rescued = !other.connected() && other.rescue.count({5, 6}) && other.rescue.count({2, 4});
        double s = seconds_since(t5);
        std::ostringstream d;
        d << closing << "/" << cycles.size() << " cycles close; <123456> " << (standard ? "connected" : "disconnected")
          << "; <126354> " << (rescued ? "disconnected, rescued by 65 and 24" : "not as expected") << "; " << s << "s";
        report(5, "isotopy-graph dichotomy over the 60 cycles",
               cycles.size() == 60 && closing == 60 && standard && rescued && s < 1, d.str());
    }

    // 6
    {
        auto n = hamiltonian_cycles(complete_graph(6)).size();
        report(6, "Hamiltonian cycles of K6", n == 60, std::to_string(n));
    }

    // 7
    {
        auto t7 = clock_type::now();
        bool ok = true;
        std::ostringstream d;
        for (int n = 1; n <= 4; ++n) {
            Thm3Params p;
            p.n = n;
            auto inst = theorem3_graph(p);
            const auto& g = inst.embedding.graph;
            Integer det = knot_determinant(cycle_of(inst.embedding, inst.report.designated_cycle));
            bool good = validate_embedding(inst.embedding).valid() && g.order() == static_cast<std::size_t>(6 * (n + 1)) &&
                        min_valency(g) == static_cast<std::size_t>(n) && det == 3;
            ok = ok && good;
            d << "n=" << n << ":" << g.order() << "v,d=" << min_valency(g) << ",det=" << det << " ";
        }
        double s = seconds_since(t7);
        d << s << "s";
        report(7, "knotted-core family with blobs", ok && s < 30, d.str());
    }

    // 8
    {
        auto t8 = clock_type::now();
        bool ok = true;
        std::ostringstream d;
        for (int n = 2; n <= 4; ++n) {
            Thm4Params p;
            p.n = n;
            auto inst = theorem4_graph(p);
            const auto& g = inst.embedding.graph;
            int k = vertex_connectivity(g);
            Integer det = knot_determinant(cycle_of(inst.embedding, theorem4_designated_cycle(n)));
            bool good = validate_embedding(inst.embedding).valid() && g.order() == static_cast<std::size_t>(12 * n) &&
                        k >= n && det == 3;
            ok = ok && good;
            d << "n=" << n << ":" << g.order() << "v,kappa=" << k << ",det=" << det << " ";
        }
        double s = seconds_since(t8);
        d << s << "s";
        report(8, "cube-gadget family", ok && s < 120, d.str());
    }

    // 9
    {
        SplitMix64 rng(909);
        int lk_ok = 0, det_ok = 0, disk_ok = 0, pent_ok = 0;
        for (int it = 0; it < 100; ++it) {
            auto pts = gen::general_points(rng, 8, 0, 12);
            std::vector<PolygonalCycle> cs{PolygonalCycle{{pts.begin(), pts.begin() + 4}},
                                           PolygonalCycle{{pts.begin() + 4, pts.end()}}};
            auto dirs = generic_directions(cs, 3);
            long a = linking_number(build_diagram(cs, dirs[0]));
            lk_ok += a == linking_number(build_diagram(cs, dirs[1])) && a == linking_number(build_diagram(cs, dirs[2]));
        }
        for (int it = 0; it < 100; ++it) {
            auto c = gen::random_polygon(rng, 6 + rng.below(3), 12);
            auto dirs = generic_directions({c}, 3);
            Integer a = knot_determinant(build_diagram({c}, dirs[0]));
            det_ok += a == knot_determinant(build_diagram({c}, dirs[1])) && a == knot_determinant(build_diagram({c}, dirs[2]));
        }
        for (int it = 0; it < 100; ++it) {
            auto pts = gen::general_points(rng, 3 + 3 + rng.below(4), 0, 10);
            PolygonalCycle tri{{pts.begin(), pts.begin() + 3}}, cyc{{pts.begin() + 3, pts.end()}};
            disk_ok += linking_number(tri, cyc) == oracle::disk_linking({pts[0], pts[1], pts[2]}, cyc);
        }
        for (int it = 0; it < 500; ++it) pent_ok += knot_determinant(gen::random_polygon(rng, 5, 20)) == 1;
        std::ostringstream d;
        d << "lk " << lk_ok << "/100, det " << det_ok << "/100, disk oracle " << disk_ok << "/100, pentagons " << pent_ok
          << "/500";
        report(9, "invariants are direction independent and match oracles",
               lk_ok == 100 && det_ok == 100 && disk_ok == 100 && pent_ok == 500, d.str());
    }

    // 10
    {
        int ok = 0;
        for (const auto& [e, c] : certs) {
            auto back = certificate_from_json(parse_json_text(certificate_to_json(c).dump()));
            ok += recheck_certificate(e, back).ok();
        }
        report(10, "certificates re-verified from their serialized form",
               certs.size() == 1000 && ok == 1000, std::to_string(ok) + "/" + std::to_string(certs.size()));
    }

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << " ("
              << seconds_since(t_all) << "s)" << std::endl;
    return failures == 0 ? 0 : 1;
}

/*
 * Copyright 2026 The mubkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * JSON schemas for descriptors, bases, reports and Bell families.
 *
 * Emission goes through JDoc (insertion-ordered keys, 17-significant-digit
 * floats, byte-stable). Parsing of files handed back to `verify` commands
 * uses nlohmann/json; verification always runs on the parsed float
 * amplitudes, with the exact form only cross-checked, so a corrupted file
 * cannot be "repaired" by re-deriving amplitudes.
 */

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mubkit/entangle.hpp"
#include "mubkit/json_doc.hpp"
#include "mubkit/mub.hpp"

namespace mubkit {

inline JDoc field_descriptor_json(const Field& f) {
    JDoc d = JDoc::obj();
    d.set("p", JDoc::integer(f.p()));
    d.set("m", JDoc::integer(f.m()));
    JDoc mod = JDoc::arr();
    for (int c : f.modulus()) mod.push(JDoc::integer(c));
    d.set("modulus_coeffs", std::move(mod));
    JDoc gen = JDoc::arr();
    const FieldElement g = f.generator();
    for (int c : g.coeffs()) gen.push(JDoc::integer(c));
    d.set("generator_coeffs", std::move(gen));
    return d;
}

inline JDoc ring_descriptor_json(const GaloisRing& r) {
    JDoc d = JDoc::obj();
    d.set("m", JDoc::integer(r.m()));
    JDoc hh = JDoc::arr();
    for (int c : r.h()) hh.push(JDoc::integer(c));
    d.set("h_coeffs", std::move(hh));
    JDoc t = JDoc::arr();
    for (const RingElement& e : r.teichmuller()) t.push(JDoc::integer(r.index(e)));
    d.set("teichmuller_indices", std::move(t));
    return d;
}

inline JDoc basis_json(const Basis& b) {
    JDoc d = JDoc::obj();
    d.set("label", JDoc::str(b.label()));
    d.set("dim", JDoc::integer(static_cast<long long>(b.dim())));
    JDoc vecs = JDoc::arr();
    for (const StateVector& v : b.vectors()) {
        JDoc vec = JDoc::arr();
        for (const cplx& a : v.amplitudes()) {
            JDoc c = JDoc::obj();
            c.set("re", JDoc::number(a.real()));
            c.set("im", JDoc::number(a.imag()));
            vec.push(std::move(c));
        }
        vecs.push(std::move(vec));
    }
    d.set("vectors", std::move(vecs));
    // shared exact form: all vectors of one basis use the same scale and order
    if (!b.vectors().empty() && b.vector(0).exact()) {
        const ExactForm& ef0 = *b.vector(0).exact();
        JDoc exact = JDoc::obj();
        exact.set("scale_denom_sqrt", JDoc::integer(ef0.scale_denom_sqrt));
        exact.set("root_order", JDoc::integer(ef0.root_order));
        JDoc exps = JDoc::arr();
        for (const StateVector& v : b.vectors()) {
            JDoc row = JDoc::arr();
            if (v.exact()) {
                for (const auto& e : v.exact()->exponents)
                    row.push(e ? JDoc::integer(*e) : JDoc::null());
            }
            exps.push(std::move(row));
        }
        exact.set("exponents", std::move(exps));
        d.set("exact", std::move(exact));
    }
    if (b.phase_labels()) {
        JDoc ph = JDoc::arr();
        for (double t : *b.phase_labels()) ph.push(JDoc::number(t));
        d.set("eigenphases", std::move(ph));
    }
    return d;
}

inline JDoc mub_report_json(const MubReport& rep) {
    JDoc d = JDoc::obj();
    d.set("verdict", JDoc::boolean(rep.verdict));
    d.set("base_count", JDoc::integer(static_cast<long long>(rep.base_count)));
    d.set("dim", JDoc::integer(rep.dim));
    d.set("tolerance", JDoc::number(rep.tolerance));
    JDoc counts = JDoc::obj();
    counts.set("identical", JDoc::integer(rep.count_identical));
    counts.set("orthogonal", JDoc::integer(rep.count_orthogonal));
    counts.set("unbiased", JDoc::integer(rep.count_unbiased));
    counts.set("other", JDoc::integer(rep.count_other));
    d.set("pair_counts", std::move(counts));
    JDoc blocks = JDoc::arr();
    for (const auto& row : rep.blocks) {
        JDoc r = JDoc::arr();
        for (const auto& cell : row) r.push(JDoc::str(cell));
        blocks.push(std::move(r));
    }
    d.set("blocks", std::move(blocks));
    JDoc viol = JDoc::arr();
    for (const PairViolation& v : rep.violations) {
        JDoc e = JDoc::obj();
        e.set("basis_i", JDoc::integer(static_cast<long long>(v.basis_i)));
        e.set("vec_i", JDoc::integer(static_cast<long long>(v.vec_i)));
        e.set("basis_j", JDoc::integer(static_cast<long long>(v.basis_j)));
        e.set("vec_j", JDoc::integer(static_cast<long long>(v.vec_j)));
        e.set("magnitude", JDoc::number(v.magnitude));
        e.set("got", JDoc::str(to_string(v.got)));
        e.set("expected", JDoc::str(to_string(v.expected)));
        viol.push(std::move(e));
    }
    d.set("violations", std::move(viol));
    return d;
}

inline JDoc bell_report_json(const BellReport& rep) {
    JDoc d = JDoc::obj();
    d.set("verdict", JDoc::boolean(rep.verdict));
    d.set("kind", JDoc::str(rep.kind));
    d.set("q", JDoc::integer(rep.q));
    d.set("state_count", JDoc::integer(static_cast<long long>(rep.state_count)));
    d.set("tolerance", JDoc::number(rep.tolerance));
    d.set("max_entanglement_residual", JDoc::number(rep.max_entanglement_residual));
    d.set("max_overlap_error", JDoc::number(rep.max_overlap_error));
    JDoc viol = JDoc::arr();
    for (const BellViolation& v : rep.violations) {
        JDoc e = JDoc::obj();
        e.set("what", JDoc::str(v.what));
        e.set("i", JDoc::integer(static_cast<long long>(v.i)));
        e.set("j", JDoc::integer(static_cast<long long>(v.j)));
        e.set("value", JDoc::number(v.value));
        e.set("expected", JDoc::number(v.expected));
        viol.push(std::move(e));
    }
    d.set("violations", std::move(viol));
    return d;
}

inline JDoc bell_family_json(const BellFamily& fam) {
    JDoc d = JDoc::obj();
    d.set("kind", JDoc::str(fam.kind));
    d.set("q", JDoc::integer(fam.q));
    JDoc states = JDoc::arr();
    for (size_t i = 0; i < fam.states.size(); ++i) {
        JDoc s = JDoc::obj();
        s.set("h", JDoc::integer(fam.labels[i].h));
        s.set("a", JDoc::integer(fam.labels[i].a));
        s.set("b", JDoc::integer(fam.labels[i].b));
        JDoc amps = JDoc::arr();
        for (const cplx& a : fam.states[i].amplitudes()) {
            JDoc pair = JDoc::arr();
            pair.push(JDoc::number(a.real()));
            pair.push(JDoc::number(a.imag()));
            amps.push(std::move(pair));
        }
        s.set("amps", std::move(amps));
        states.push(std::move(s));
    }
    d.set("states", std::move(states));
    return d;
}

// ---------------------------------------------------------------------------
// parsing (verify paths)
// ---------------------------------------------------------------------------

struct ParsedMubFile {
    std::string kind;  // "field" | "ring" | "pegg"
    long q = 0;
    long k = 0;
    bool include_computational = true;
    std::vector<Basis> bases;
};

inline ParsedMubFile parse_mub_file(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ParsedMubFile out;
    out.kind = j.at("kind").get<std::string>();
    out.q = j.at("q").get<long>();
    out.k = j.value("k", 0L);
    out.include_computational = j.value("include_computational", true);
    for (const auto& jb : j.at("bases")) {
        std::vector<StateVector> vecs;
        const auto& jvecs = jb.at("vectors");
        const nlohmann::json* jexact = jb.contains("exact") ? &jb.at("exact") : nullptr;
        for (size_t vi = 0; vi < jvecs.size(); ++vi) {
            std::vector<cplx> amps;
            amps.reserve(jvecs[vi].size());
            for (const auto& c : jvecs[vi])
                amps.emplace_back(c.at("re").get<double>(), c.at("im").get<double>());
            std::optional<ExactForm> ef;
            if (jexact) {
                ExactForm e;
                e.scale_denom_sqrt = jexact->at("scale_denom_sqrt").get<long>();
                e.root_order = jexact->at("root_order").get<int>();
                for (const auto& x : jexact->at("exponents").at(vi)) {
                    if (x.is_null())
                        e.exponents.push_back(std::nullopt);
                    else
                        e.exponents.push_back(x.get<int>());
                }
                if (e.exponents.size() == amps.size()) ef = std::move(e);
            }
            vecs.emplace_back(std::move(amps), std::move(ef));
        }
        std::optional<std::vector<double>> phases;
        if (jb.contains("eigenphases")) phases = jb.at("eigenphases").get<std::vector<double>>();
        out.bases.emplace_back(jb.at("label").get<std::string>(), std::move(vecs), std::move(phases));
    }
    return out;
}

inline BellFamily parse_bell_file(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BellFamily fam;
    fam.kind = j.at("kind").get<std::string>();
    fam.q = j.at("q").get<long>();
    for (const auto& js : j.at("states")) {
        BellLabel lab{js.at("h").get<long>(), js.at("a").get<long>(), js.at("b").get<long>()};
        std::vector<cplx> amps;
        for (const auto& pair : js.at("amps"))
            amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        fam.labels.push_back(lab);
        fam.states.emplace_back(fam.q, std::move(amps));
    }
    return fam;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace mubkit

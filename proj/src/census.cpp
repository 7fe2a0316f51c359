#include "mpart/census.hpp"

#include "mpart/exceptions.hpp"
#include "mpart/interp.hpp"
#include "mpart/relation.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mpart {

bool ExceptionRegistry::contains(const std::string& key) const {
    return !id_for(key).empty();
}

std::string ExceptionRegistry::id_for(const std::string& key) const {
    for (const auto& [id, k] : entries)
        if (k == key) return id;
    return "";
}

ExceptionRegistry build_exception_registry() {
    ExceptionRegistry reg;
    for (const auto& e : exception_matrices())
        reg.entries.emplace_back(e.id, key_to_string(canonical_key(e.matrix)));
    return reg;
}

std::vector<PartitionMatrix> enumerate_canonical(int size) {
    const int n_entries = size * (size + 1) / 2;
    std::vector<PartitionMatrix> out;
    CanonicalKey word(n_entries, Symbol::Zero);
    // odometer over {0,1,*}^n_entries in lexicographic w-order
    for (;;) {
        PartitionMatrix m = matrix_from_w_word(word, size);
        if (canonical_key(m) == word) out.push_back(m);
        int pos = n_entries - 1;
        while (pos >= 0 && word[pos] == Symbol::Star) {
            word[pos] = Symbol::Zero;
            pos--;
        }
        if (pos < 0) break;
        word[pos] = Symbol(uint8_t(word[pos]) + 1);
    }
    return out;
}

Classification classify(const PartitionMatrix& m, const ExceptionRegistry& reg,
                        bool use_exceptions) {
    Classification out;
    if (is_pure(m)) {
        out.method = Method::PureHomomorphism;
        out.verdict =
            pure_matrix_hard(m) ? Verdict::SharpPComplete : Verdict::PolynomialTime;
        return out;
    }
    if (doubletons_tractable(m)) {
        out.method = Method::Doubletons;
        out.verdict = Verdict::PolynomialTime;
        return out;
    }
    if (auto interp = interpolation_hardness_test(m)) return *interp;
    if (use_exceptions) {
        const std::string key = key_to_string(canonical_key(m));
        const std::string id = reg.id_for(key);
        if (!id.empty()) {
            out.verdict = Verdict::SharpPComplete;
            out.method = Method::Exception;
            out.exception_id = id;
            return out;
        }
    }
    return out; // Unresolved / None
}

CensusResult run_census(const CensusOptions& opts) {
    CensusResult res;
    const ExceptionRegistry reg = build_exception_registry();
    const std::vector<PartitionMatrix> reps = enumerate_canonical(4);

    res.entries.resize(reps.size());
    auto work = [&](size_t begin, size_t stride) {
        for (size_t i = begin; i < reps.size(); i += stride) {
            CensusEntry& e = res.entries[i];
            e.matrix = reps[i];
            e.key = key_to_string(w_word(reps[i]));
            e.cls = classify(reps[i], reg, opts.use_exceptions);
            e.witness = has_derect_sequence(reps[i]);
            e.orbit_size = orbit_size(reps[i]);
        }
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; t++) threads.emplace_back(work, size_t(t), size_t(jobs));
        for (auto& t : threads) t.join();
    }

    for (const CensusEntry& e : res.entries) {
        res.total_matrices += e.orbit_size;
        switch (e.cls.verdict) {
        case Verdict::PolynomialTime: res.n_poly++; break;
        case Verdict::SharpPComplete:
            res.n_hard++;
            if (e.cls.method == Method::Exception) res.n_exception++;
            break;
        case Verdict::Unresolved: res.n_unresolved++; break;
        }
    }
    return res;
}

CrossCheckResult cross_check_dichotomy(const CensusResult& census) {
    CrossCheckResult cc;
    auto fail = [&](const std::string& msg) {
        cc.ok = false;
        cc.failures.push_back(msg);
    };

    for (const CensusEntry& e : census.entries) {
        const bool has_seq = e.witness.has_value();
        if (has_seq && !verify_witness(e.matrix, *e.witness))
            fail(e.key + ": stored witness fails re-verification");
        switch (e.cls.verdict) {
        case Verdict::PolynomialTime:
            if (has_seq) fail(e.key + ": tractable verdict but a sequence exists");
            break;
        case Verdict::SharpPComplete:
            if (!has_seq) fail(e.key + ": hard verdict but no sequence exists");
            break;
        case Verdict::Unresolved:
            fail(e.key + ": unresolved");
            break;
        }
    }

    // Each registry matrix must admit the two-set witness ({a,b},{c,d}) in its
    // table coordinates.
    for (const auto& entry : exception_matrices()) {
        PartSet ab, cd;
        ab.add(0);
        ab.add(1);
        cd.add(2);
        cd.add(3);
        DerectWitness w{{ab, cd}, star_relation(entry.matrix, ab, cd)};
        if (!verify_witness(entry.matrix, w))
            fail(entry.id + ": expected ({a,b},{c,d}) witness does not verify");
    }
    return cc;
}

namespace {

nlohmann::json entry_to_json(const CensusEntry& e) {
    nlohmann::json j;
    j["key"] = e.key;
    j["matrix"] = format_matrix_rows(e.matrix);
    j["orbit"] = e.orbit_size;
    j["verdict"] = verdict_name(e.cls.verdict);
    j["method"] = method_name(e.cls.method);
    if (e.cls.method == Method::Interpolation) {
        j["pi"] = int(e.cls.pi);
        j["tau"] = int(e.cls.tau);
        j["ell"] = e.cls.ell;
        j["s"] = e.cls.s;
        j["hard_classes"] = e.cls.hard_keys;
    }
    if (!e.cls.exception_id.empty()) j["exception"] = e.cls.exception_id;
    if (e.witness) {
        nlohmann::json seq = nlohmann::json::array();
        for (PartSet s : e.witness->sequence) seq.push_back(s.to_string());
        j["sequence"] = seq;
        j["relation"] = e.witness->offending.to_string();
    }
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string census_to_json(const CensusResult& census) {
    nlohmann::json j;
    j["summary"] = {
        {"canonical", census.entries.size()},
        {"total", census.total_matrices},
        {"polynomial", census.n_poly},
        {"sharp_p_complete", census.n_hard},
        {"unresolved", census.n_unresolved},
        {"exception", census.n_exception},
    };
    nlohmann::json arr = nlohmann::json::array();
    for (const CensusEntry& e : census.entries) arr.push_back(entry_to_json(e));
    j["entries"] = std::move(arr);
    return j.dump(2);
}

std::string census_to_csv(const CensusResult& census) {
    std::ostringstream out;
    out << "key,matrix,orbit,verdict,method,detail,sequence\n";
    for (const CensusEntry& e : census.entries) {
        std::string detail;
        if (e.cls.method == Method::Interpolation) {
            std::ostringstream d;
            d << "pi=" << int(e.cls.pi) << ";tau=" << int(e.cls.tau)
              << ";l=" << e.cls.ell << ";s=" << e.cls.s;
            detail = d.str();
        } else if (!e.cls.exception_id.empty()) {
            detail = e.cls.exception_id;
        }
        std::string seq;
        if (e.witness) {
            for (size_t i = 0; i < e.witness->sequence.size(); i++) {
                if (i) seq += ' ';
                seq += e.witness->sequence[i].to_string();
            }
        }
        out << csv_escape(e.key) << ',' << csv_escape(format_matrix_rows(e.matrix))
            << ',' << e.orbit_size << ',' << verdict_name(e.cls.verdict) << ','
            << method_name(e.cls.method) << ',' << csv_escape(detail) << ','
            << csv_escape(seq) << '\n';
    }
    return out.str();
}

std::string census_summary(const CensusResult& census) {
    std::ostringstream out;
    out << "canonical representatives: " << census.entries.size() << "\n"
        << "matrices covered (orbit sum): " << census.total_matrices << "\n"
        << "polynomial-time: " << census.n_poly << "\n"
        << "#P-complete: " << census.n_hard
        << " (of which hand-resolved: " << census.n_exception << ")\n"
        << "unresolved: " << census.n_unresolved << "\n";
    return out.str();
}

} // namespace mpart

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hopfcross {

// Pass/fail ledger for a family of identities. A failed entry always carries
// the first basis multi-index where the identity broke.
struct AxiomReport {
    struct Entry {
        std::string axiom;
        bool passed = true;
        std::optional<std::vector<size_t>> witness;
        std::string detail;
    };

    std::vector<Entry> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }

    const Entry* find(const std::string& axiom) const {
        for (const auto& e : entries)
            if (e.axiom == axiom) return &e;
        return nullptr;
    }

    bool failed(const std::string& axiom) const {
        const Entry* e = find(axiom);
        return e && !e->passed;
    }

    void pass(const std::string& axiom) { entries.push_back({axiom, true, std::nullopt, {}}); }

    void failure(const std::string& axiom, std::vector<size_t> witness, std::string detail = {}) {
        entries.push_back({axiom, false, std::move(witness), std::move(detail)});
    }

    void record(const std::string& axiom, bool ok, std::vector<size_t> witness = {},
                std::string detail = {}) {
        if (ok)
            pass(axiom);
        else
            failure(axiom, std::move(witness), std::move(detail));
    }

    void merge(const AxiomReport& other, const std::string& prefix = {}) {
        for (auto e : other.entries) {
            if (!prefix.empty()) e.axiom = prefix + e.axiom;
            entries.push_back(std::move(e));
        }
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& e : entries) {
            os << (e.passed ? "pass" : "FAIL") << "  " << e.axiom;
            if (!e.passed && e.witness) {
                os << "  witness=(";
                for (size_t i = 0; i < e.witness->size(); ++i)
                    os << (i ? "," : "") << (*e.witness)[i];
                os << ")";
            }
            if (!e.detail.empty()) os << "  " << e.detail;
            os << "\n";
        }
        return os.str();
    }
};

} // namespace hopfcross

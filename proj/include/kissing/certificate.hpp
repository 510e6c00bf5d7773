#ifndef KISSING_CERTIFICATE_HPP
#define KISSING_CERTIFICATE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kissing {

enum class Verdict { pass, fail };

inline const char* to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

/// Outcome of a single checked claim. Witnesses are rendered points,
/// polynomials, intervals or evaluations supporting the verdict.
struct Certificate {
    Verdict verdict = Verdict::pass;
    std::string subject;
    std::vector<std::string> witnesses;
    std::string notes;

    bool passed() const { return verdict == Verdict::pass; }

    static Certificate pass(std::string subject, std::vector<std::string> witnesses = {},
                            std::string notes = {}) {
        return {Verdict::pass, std::move(subject), std::move(witnesses), std::move(notes)};
    }

    // A failing certificate must point at something concrete.
    static Certificate fail(std::string subject, std::vector<std::string> witnesses,
                            std::string notes = {}) {
        if (witnesses.empty()) {
            throw std::logic_error("failing certificate for '" + subject + "' has no witness");
        }
        return {Verdict::fail, std::move(subject), std::move(witnesses), std::move(notes)};
    }
};

} // namespace kissing

#endif // KISSING_CERTIFICATE_HPP

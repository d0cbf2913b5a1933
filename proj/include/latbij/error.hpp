#ifndef LATBIJ_ERROR_HPP
#define LATBIJ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace latbij {

// Error categories. The CLI maps these onto its exit-code contract:
// resource/overflow -> 3, domain errors -> 4, file errors -> 5.
enum class Errc {
    syntax,             // token not in the grammar
    invariant,          // a type invariant is violated
    not_little,         // Schroder path has a D step starting on the diagonal
    not_raw,            // marked height sequence fails the raw-form predicate
    not_lonely_free,    // marked height sequence fails the lonely-free predicate
    invalid_growth_seq,
    not_invertible,     // offending-normal form fails the raw predicate
    invalid_sequence,   // bounded sequence invalid for its ambient j
    malformed_path,
    inversion_failure,  // Ramirez path outside the bijection image
    assertion,          // internal guard tripped (impossible on valid input)
    resource_limit,
    overflow,
    file_format,
    io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Builds "clause (at position p)" messages so callers can report the exact
// violated clause and where.
[[noreturn]] void fail(Errc code, const std::string& clause);
[[noreturn]] void fail_at(Errc code, const std::string& clause, std::size_t position);

}  // namespace latbij

#endif

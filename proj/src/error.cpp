#include "latbij/error.hpp"

namespace latbij {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::syntax: return "SyntaxError";
        case Errc::invariant: return "InvariantError";
        case Errc::not_little: return "NotLittle";
        case Errc::not_raw: return "NotRaw";
        case Errc::not_lonely_free: return "NotLonelyFree";
        case Errc::invalid_growth_seq: return "InvalidGrowthSeq";
        case Errc::not_invertible: return "NotInvertible";
        case Errc::invalid_sequence: return "InvalidSequence";
        case Errc::malformed_path: return "MalformedPath";
        case Errc::inversion_failure: return "InversionFailure";
        case Errc::assertion: return "AssertionFailure";
        case Errc::resource_limit: return "ResourceLimit";
        case Errc::overflow: return "Overflow";
        case Errc::file_format: return "FileFormat";
        case Errc::io: return "IoError";
    }
    return "Error";
}

void fail(Errc code, const std::string& clause) {
    throw Error(code, std::string(errc_name(code)) + ": " + clause);
}

void fail_at(Errc code, const std::string& clause, std::size_t position) {
    throw Error(code, std::string(errc_name(code)) + ": " + clause +
                          " (at position " + std::to_string(position) + ")");
}

}  // namespace latbij

#include "arrcohom/complex_io.hpp"

#include "arrcohom/errors.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

namespace arrcohom {

namespace {

std::vector<FaceSet> read_sets(const nlohmann::json& arr, int m, const char* field)
{
    if (!arr.is_array()) throw MalformedInput(std::string("\"") + field + "\" must be an array");
    std::vector<FaceSet> out;
    for (const auto& item : arr) {
        if (!item.is_array()) throw MalformedInput(std::string("entries of \"") + field + "\" must be arrays");
        std::vector<Vertex> v;
        for (const auto& x : item) {
            if (!x.is_number_integer()) throw MalformedInput("vertex labels must be integers");
            const auto label = x.get<long long>();
            if (label < 1 || label > m)
                throw MalformedInput("vertex label " + std::to_string(label) + " outside [1, " + std::to_string(m) + "]");
            v.push_back(static_cast<Vertex>(label));
        }
        try {
            out.emplace_back(std::move(v));
        } catch (const DomainError& e) {
            throw MalformedInput(std::string("inconsistent face data in \"") + field + "\": " + e.what());
        }
    }
    return out;
}

}  // namespace

SimplicialComplex parse_complex_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedInput(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw MalformedInput("complex must be a JSON object");
    if (!doc.contains("m") || !doc["m"].is_number_integer()) throw MalformedInput("missing integer field \"m\"");
    const auto m = doc["m"].get<long long>();
    if (m < 0 || m > 1000) throw MalformedInput("\"m\" out of range");

    const bool has_facets = doc.contains("facets");
    const bool has_missing = doc.contains("missing_faces");
    if (has_facets == has_missing) throw MalformedInput("exactly one of \"facets\" or \"missing_faces\" is required");

    const int mi = static_cast<int>(m);
    if (has_facets) return SimplicialComplex::from_facets(mi, read_sets(doc["facets"], mi, "facets"));
    return SimplicialComplex::from_missing_faces(mi, read_sets(doc["missing_faces"], mi, "missing_faces"));
}

SimplicialComplex read_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex_json(ss.str());
}

std::string canonical_complex_json(const SimplicialComplex& K)
{
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : K.facets()) facets.push_back(f.vertices());
    nlohmann::json doc;
    doc["m"] = K.vertex_count();
    doc["facets"] = std::move(facets);
    return doc.dump();
}

std::string canonical_hash(const SimplicialComplex& K)
{
    const std::string text = canonical_complex_json(K);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw IntegrityError("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

}  // namespace arrcohom

#pragma once

#include <string>

#include "homw1/posets.hpp"

namespace homw1::io {

// Versioned JSON complex format:
//   {"format":"homw1-complex","version":1,"labels":[...],
//    "simplices":{"0":[[0],[1]],"1":[[0,1]]}}
// Involutions: {"format":"homw1-involution","version":1,"perm":[...]}.

std::string complex_to_json(const posets::SimplicialComplex& c);
posets::SimplicialComplex complex_from_json(const std::string& text);

std::string involution_to_json(const posets::VertexPerm& t);
posets::VertexPerm involution_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace homw1::io

// Regenerates tests/corpus/ from the in-code corpus. The io suite fails when
// the checked-in files drift from what this writes.
#include <iostream>

#include "catgal/io.hpp"
#include "support/corpus.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  for (const auto& [name, c] : corpus::categories()) {
    catgal::write_file_atomic(dir + "/" + name + ".json", catgal::serialize(catgal::make_document(c)));
  }
  for (const auto& [name, adj] : corpus::adjunctions()) {
    catgal::write_file_atomic(dir + "/adj_" + name + ".json", catgal::serialize(catgal::make_document(adj)));
  }
  return 0;
}

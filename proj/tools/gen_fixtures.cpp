// Writes the fixture gallery. With --check, compares against the files on
// disk instead and exits 1 on any difference.
#include "lts/fixtures.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: gen_fixtures <dir> [--check]\n";
    return 2;
  }
  const std::string dir = argv[1];
  const bool check = argc > 2 && std::string(argv[2]) == "--check";
  int status = 0;
  for (const auto& entry : lts::fixtures::gallery()) {
    const std::string path = dir + "/" + entry.file;
    const std::string text = lts::dump(entry.document);
    if (check) {
      std::ifstream in(path);
      std::stringstream ss;
      ss << in.rdbuf();
      if (!in || ss.str() != text) {
        std::cerr << "differs: " << path << "\n";
        status = 1;
      }
    } else {
      std::ofstream(path) << text;
      std::cout << path << "\n";
    }
  }
  return status;
}

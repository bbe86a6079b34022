#include "qreset/cli.hpp"

int main(int argc, char** argv) {
  return qreset::cli::run({argv + 1, argv + argc});
}

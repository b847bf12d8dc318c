#include "termkit/cli.hpp"

int main(int argc, char** argv) {
    return termkit::cli::run(argc, argv);
}

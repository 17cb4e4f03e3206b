#include "app.hpp"

int main(int argc, char** argv) { return symdec::cli::run(argc, argv, std::cout, std::cerr); }

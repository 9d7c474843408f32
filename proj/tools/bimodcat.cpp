#include "bimod/cli.hpp"

int main(int argc, char** argv) { return bimod::run(argc, argv); }

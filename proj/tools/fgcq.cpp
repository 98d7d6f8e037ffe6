// Command-line front end; see README.md for usage.
#include <cstdio>

int main() {
    std::puts("fgcq: not yet wired");
    return 0;
}

// Placeholder main; the CLI is assembled once the suites exist.
int main() { return 0; }

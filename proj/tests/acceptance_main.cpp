// Acceptance harness; filled in once all modules land.
int main() { return 1; }

// Placeholder; filled in as the corresponding module lands.

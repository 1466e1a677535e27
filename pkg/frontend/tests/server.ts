// Shared between globalSetup (which spawns the Python server) and the
// tests that talk to it.

export const SERVER_PORT = 8977;
export const SERVER_URL = `http://127.0.0.1:${SERVER_PORT}`;

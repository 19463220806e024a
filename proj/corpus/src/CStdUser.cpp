class CStdUser {
public:
    int parse(const char* text) { return atoi(text) + 1; }

    int size(const char* text) { return strlen(text); }
};

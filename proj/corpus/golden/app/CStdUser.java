package app;

import base.util.CStd;

public class CStdUser {
    public int parse(String text) {
        return CStd.parseIntC(text) + 1;
    }

    public int size(String text) {
        return CStd.strlen(text);
    }
}

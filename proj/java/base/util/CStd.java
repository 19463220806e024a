package base.util;

/** Java counterparts of the C library functions the converted code calls. */
public final class CStd {
    private CStd() {
    }

    // atoi semantics: leading blanks, optional sign, digits; anything else stops
    public static int parseIntC(String s) {
        return (int) parseLongC(s);
    }

    public static long parseLongC(String s) {
        int i = 0;
        int n = s.length();
        while (i < n && Character.isWhitespace(s.charAt(i))) {
            i++;
        }
        boolean neg = false;
        if (i < n && (s.charAt(i) == '-' || s.charAt(i) == '+')) {
            neg = s.charAt(i) == '-';
            i++;
        }
        long v = 0;
        while (i < n && Character.isDigit(s.charAt(i))) {
            v = v * 10 + (s.charAt(i) - '0');
            i++;
        }
        return neg ? -v : v;
    }

    public static double parseDoubleC(String s) {
        try {
            return Double.parseDouble(s.trim());
        } catch (NumberFormatException e) {
            return 0.0;
        }
    }

    public static int strlen(String s) {
        return s.length();
    }
}

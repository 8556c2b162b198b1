public class S23 extends State {
    public void open() {
        log("trace");
        if (counter > 6) {
            new S16();
            switch (event) {
                case EV3:
                    send("msg7");
                    break;
            }
        } else {
            switch (event) {
                case EV3:
                    new S26();
                    break;
                case EV1:
                    new S11();
                    send("msg6");
                    break;
            }
        }
        try {
            send("msg4");
            try {
                update();
                log("trace");
            } finally {
                send("msg3");
            }
            if (counter > 0) {
                send("msg3");
                update();
            } else {
                new S03();
                new S20();
            }
        } catch (IOException e) {
            try {
                new S03();
                send("msg3");
                update();
            } catch (IllegalStateException e) {
                new S15();
                update();
            } finally {
                new S12();
                update();
                new Abstract6();
            }
            send("msg4");
            if (counter > 9) {
                send("msg3");
            } else {
                new Abstract6();
            }
        }
    }

    public void close() {
        new S17();
    }

    public void start() {
        if (counter > 8) {
            try {
                new S13();
                new S20();
                new S16();
            } catch (IllegalStateException e) {
                send("msg5");
                update();
            } catch (TimeoutException e) {
                new S02();
                new S26();
            } finally {
                new S28();
                new S17();
                new S24();
            }
            if (counter > 8) {
                send("msg7");
            } else {
                new S08();
                log("trace");
            }
        }
        try {
            if (counter > 5) {
                new S13();
                new Abstract4();
            } else {
                new S09();
            }
            new S13();
        } finally {
            send("msg0");
            send("msg7");
        }
        if (counter > 7) {
            switch (event) {
                case EV2:
                    new S28();
                    break;
                case EV4:
                    send("msg0");
                    break;
            }
        }
    }

    public void stop() {
        try {
            new S06();
        } catch (TimeoutException e) {
            send("msg5");
        } catch (IOException e) {
            new S09();
        } finally {
            new S28();
            if (counter > 8) {
                new S20();
                new S15();
                new S17();
            } else {
                send("msg5");
            }
            new S02();
        }
        switch (event) {
            case EV1:
                if (counter > 2) {
                    send("msg2");
                }
                break;
            case EV5:
                try {
                    new S05();
                } catch (IOException e) {
                    new S02();
                    send("msg6");
                    send("msg0");
                } catch (TimeoutException e) {
                    new S01();
                    send("msg0");
                    new S16();
                } finally {
                    new S24();
                }
                break;
            case EV0:
                if (counter > 5) {
                    new S20();
                    new S04();
                    new S29();
                }
                break;
        }
        new S10();
    }

    public void tick() {
        try {
            new S12();
        } finally {
            new Abstract5();
            try {
                update();
            } catch (IOException e) {
                update();
                send("msg0");
            }
        }
        new S16();
    }
}

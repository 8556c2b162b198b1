public class S21 extends State {
    public void open() {
        send("msg2");
        try {
            switch (event) {
                case EV1:
                    new Abstract5();
                    log("trace");
                    break;
                case EV4:
                    new S05();
                    break;
            }
        } catch (IOException e) {
            new S23();
        } catch (IllegalStateException e) {
            if (counter > 4) {
                new S12();
                send("msg2");
            }
            new S15();
            new S25();
        } finally {
            if (counter > 2) {
                send("msg2");
                new S29();
            } else {
                send("msg2");
            }
            try {
                new S01();
                log("trace");
                log("trace");
            } catch (IllegalStateException e) {
                send("msg4");
                send("msg4");
                send("msg1");
            } catch (TimeoutException e) {
                send("msg4");
                log("trace");
            } finally {
                update();
            }
        }
    }

    public void close() {
        new S19();
        send("msg2");
    }

    public void start() {
        if (counter > 9) {
            if (counter > 0) {
                new Abstract1();
            } else {
                new S11();
                new S12();
                send("msg3");
            }
        } else {
            send("msg0");
            try {
                new S29();
                log("trace");
                send("msg4");
            } catch (IllegalStateException e) {
                send("msg3");
                new S05();
            } finally {
                send("msg0");
            }
        }
        send("msg6");
        try {
            if (counter > 2) {
                send("msg6");
                new Helper();
                new Abstract1();
            } else {
                new S12();
                send("msg0");
            }
            switch (event) {
                case EV1:
                    update();
                    break;
            }
            try {
                send("msg5");
            } catch (IOException e) {
                send("msg3");
            } finally {
                send("msg3");
                update();
            }
        } catch (TimeoutException e) {
            log("trace");
            update();
        }
    }

    public void stop() {
        new S01();
        send("msg6");
        try {
            new Abstract0();
        } finally {
            new S16();
        }
    }

    public void tick() {
        new S11();
        new Abstract6();
    }
}

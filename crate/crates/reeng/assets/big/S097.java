public class S097 extends State {
    public void open() {
        send("msg2");
    }

    public void close() {
        if (counter > 5) {
            new S065();
        }
        send("msg6");
    }

    public void start() {
        send("msg4");
        try {
            send("msg3");
            switch (event) {
                case EV1:
                    send("msg3");
                    send("msg1");
                    break;
                case EV3:
                    send("msg2");
                    new Abstract2();
                    try {
                        send("msg0");
                        new S020();
                        new S097();
                    } catch (IOException e) {
                        new S032();
                    } catch (TimeoutException e) {
                        update();
                        send("msg0");
                        send("msg3");
                    }
                    break;
            }
            switch (event) {
                case EV1:
                    if (counter > 3) {
                        update();
                        send("msg0");
                    } else {
                        new S054();
                    }
                    send("msg3");
                    if (counter > 1) {
                        new S084();
                    } else {
                        send("msg5");
                    }
                    break;
            }
        } catch (IllegalStateException e) {
            send("msg5");
        } catch (TimeoutException e) {
            new S083();
        } finally {
            send("msg3");
            send("msg5");
            new S049();
        }
    }

    public void stop() {
        switch (event) {
            case EV2:
                try {
                    switch (event) {
                        case EV4:
                            new S070();
                            break;
                    }
                    new S057();
                } catch (TimeoutException e) {
                    switch (event) {
                        case EV0:
                            send("msg0");
                            new S055();
                            break;
                        case EV5:
                            send("msg3");
                            send("msg3");
                            break;
                    }
                    new S041();
                    log("trace");
                } catch (IOException e) {
                    send("msg2");
                } finally {
                    send("msg4");
                    new S048();
                    send("msg6");
                }
                update();
                break;
        }
        update();
        new Abstract3();
    }

    public void tick() {
        send("msg4");
        try {
            if (counter > 6) {
                try {
                    new S073();
                    send("msg1");
                } finally {
                    new S016();
                    send("msg6");
                    send("msg0");
                }
                new S013();
                if (counter > 7) {
                    send("msg5");
                } else {
                    new S068();
                    new S009();
                    send("msg1");
                }
            } else {
                send("msg6");
                if (counter > 5) {
                    send("msg1");
                    new S002();
                    update();
                }
            }
        } finally {
            switch (event) {
                case EV2:
                    send("msg5");
                    log("trace");
                    switch (event) {
                        case EV3:
                            send("msg5");
                            update();
                            log("trace");
                            break;
                    }
                    break;
                case EV4:
                    switch (event) {
                        case EV4:
                            log("trace");
                            new S040();
                            send("msg7");
                            break;
                        case EV0:
                            log("trace");
                            break;
                    }
                    try {
                        new S057();
                    } finally {
                        send("msg6");
                        new S020();
                    }
                    break;
            }
        }
    }

    public void reset() {
        send("msg1");
        send("msg6");
        send("msg0");
    }

    public void pause() {
        new S077();
        send("msg1");
    }

    public void resume() {
        log("trace");
        send("msg0");
    }

    public void load() {
        new S056();
        new S042();
    }

    public void save() {
        if (counter > 9) {
            try {
                new S098();
            } finally {
                new S086();
            }
            log("trace");
            new S018();
        } else {
            send("msg0");
            try {
                new S090();
            } finally {
                try {
                    update();
                    new S037();
                    new S020();
                } catch (IllegalStateException e) {
                    update();
                } catch (IOException e) {
                    new S022();
                    log("trace");
                    send("msg3");
                } finally {
                    send("msg6");
                }
                update();
            }
            new Abstract8();
        }
        try {
            log("trace");
        } catch (IOException e) {
            update();
        } catch (IllegalStateException e) {
            new S020();
        }
    }
}

public class S077 extends Abstract1 {
    public void open() {
        send("msg6");
        switch (event) {
            case EV4:
                new Abstract6();
                new S044();
                break;
            case EV0:
                new S075();
                new S037();
                send("msg1");
                break;
            case EV5:
                send("msg2");
                send("msg3");
                break;
        }
        send("msg1");
    }

    public void close() {
        update();
    }

    public void start() {
        new S036();
    }

    public void stop() {
        send("msg1");
        send("msg7");
        send("msg6");
    }

    public void tick() {
        send("msg0");
        new S039();
    }

    public void reset() {
        if (counter > 9) {
            if (counter > 6) {
                send("msg1");
            } else {
                send("msg4");
            }
        } else {
            new S091();
            try {
                new S098();
            } catch (TimeoutException e) {
                send("msg2");
            }
        }
        new Abstract18();
        try {
            new S049();
            update();
        } finally {
            send("msg2");
        }
    }

    public void pause() {
        update();
        send("msg5");
        try {
            new S080();
            new S047();
        } catch (IOException e) {
            send("msg2");
            send("msg5");
            send("msg5");
        } catch (TimeoutException e) {
            if (counter > 8) {
                send("msg6");
                switch (event) {
                    case EV0:
                        new S017();
                        new S002();
                        break;
                    case EV2:
                        new S001();
                        break;
                    default:
                        update();
                        break;
                }
                send("msg4");
            } else {
                new S059();
                new S035();
                log("trace");
            }
            send("msg0");
            new S008();
        } finally {
            new Abstract5();
        }
    }

    public void resume() {
        if (counter > 4) {
            new S049();
            switch (event) {
                case EV4:
                    send("msg2");
                    break;
                case EV5:
                    log("trace");
                    new S022();
                    break;
            }
        } else {
            new S022();
            send("msg1");
            if (counter > 8) {
                new S021();
                log("trace");
            }
        }
        send("msg3");
        try {
            try {
                send("msg1");
                try {
                    new S075();
                } catch (TimeoutException e) {
                    update();
                } catch (IOException e) {
                    new S068();
                    send("msg2");
                    new S020();
                } finally {
                    log("trace");
                    send("msg4");
                }
            } catch (IllegalStateException e) {
                switch (event) {
                    case EV0:
                        send("msg7");
                        break;
                    default:
                        new S096();
                        send("msg0");
                        new S056();
                        break;
                }
                new S065();
            } finally {
                if (counter > 4) {
                    new S001();
                }
            }
            send("msg0");
        } catch (TimeoutException e) {
            send("msg6");
            if (counter > 5) {
                switch (event) {
                    case EV5:
                        new S012();
                        new S059();
                        break;
                    case EV1:
                        send("msg0");
                        break;
                    case EV0:
                        new S079();
                        new S017();
                        break;
                    default:
                        send("msg4");
                        break;
                }
                new S046();
                switch (event) {
                    case EV1:
                        new S074();
                        new S054();
                        update();
                        break;
                    case EV3:
                        new S015();
                        send("msg6");
                        new Abstract17();
                        break;
                    default:
                        send("msg5");
                        log("trace");
                        break;
                }
            } else {
                try {
                    send("msg7");
                    send("msg4");
                    send("msg4");
                } finally {
                    send("msg2");
                    new S007();
                    send("msg1");
                }
            }
            new S033();
        }
    }

    public void load() {
        new S038();
        try {
            new S037();
        } catch (TimeoutException e) {
            send("msg3");
            send("msg4");
            try {
                try {
                    new S071();
                    log("trace");
                    update();
                } catch (TimeoutException e) {
                    update();
                    send("msg4");
                } catch (IOException e) {
                    send("msg0");
                    send("msg6");
                }
                new S021();
                send("msg3");
            } finally {
                send("msg4");
                try {
                    new Abstract18();
                } finally {
                    send("msg2");
                }
            }
        } finally {
            if (counter > 5) {
                if (counter > 5) {
                    new S020();
                    update();
                    send("msg6");
                }
                switch (event) {
                    case EV3:
                        send("msg7");
                        break;
                    case EV0:
                        log("trace");
                        break;
                    case EV4:
                        log("trace");
                        log("trace");
                        update();
                        break;
                }
            } else {
                send("msg4");
                new S016();
            }
            switch (event) {
                case EV3:
                    new Abstract19();
                    break;
                case EV2:
                    new S052();
                    new S028();
                    send("msg0");
                    break;
                case EV0:
                    send("msg1");
                    send("msg3");
                    send("msg2");
                    break;
            }
        }
    }

    public void save() {
        if (counter > 6) {
            try {
                if (counter > 5) {
                    send("msg7");
                } else {
                    new S046();
                    send("msg4");
                }
            } catch (IOException e) {
                try {
                    new S022();
                    new S008();
                    new S076();
                } catch (TimeoutException e) {
                    new Abstract3();
                    send("msg1");
                } catch (IllegalStateException e) {
                    new S075();
                    send("msg4");
                }
                new S015();
                new S007();
            } finally {
                try {
                    send("msg3");
                } catch (IllegalStateException e) {
                    send("msg1");
                    send("msg1");
                    send("msg2");
                } finally {
                    send("msg7");
                }
                new S083();
                send("msg6");
            }
        }
        try {
            send("msg2");
        } catch (IllegalStateException e) {
            new Abstract15();
            new S008();
        } finally {
            new S035();
            new S091();
            new S009();
        }
    }
}
